#include "raysec/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace raysec {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Irrational offset keeps starting points off the real axis so conjugate
// pairs can separate.
constexpr double kStartAngle = 0.4;
constexpr int kPolishSteps = 3;
// Roots closer than this (relative) to another root are left unpolished;
// independent Newton moves would break the balance of a cluster.
constexpr double kPolishIsolation = 1e-3;

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

Complex canonical(Complex z) {
  // -0.0 imaginary parts would put negative reals at arg -pi.
  if (z.imag() == 0.0) return {z.real(), 0.0};
  if (z.real() == 0.0) return {0.0, z.imag()};
  return z;
}

// Double-double arithmetic (Dekker/Knuth error-free transformations). Used
// for Horner evaluation inside the iteration, which shrinks the noise disk
// around a k-fold root from eps^(1/k) to eps^(2/k).
struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
  constexpr double kSplit = 134217729.0;  // 2^27 + 1
  const double p = a * b;
  const double ta = kSplit * a, tb = kSplit * b;
  const double ah = ta - (ta - a), al = a - ah;
  const double bh = tb - (tb - b), bl = b - bh;
  return {p, ((ah * bh - p) + ah * bl + al * bh) + al * bl};
}

inline DD operator+(DD x, DD y) {
  DD s = two_sum(x.hi, y.hi);
  s.lo += x.lo + y.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DD operator-(DD x) { return {-x.hi, -x.lo}; }

inline DD operator*(DD x, double y) {
  DD p = two_prod(x.hi, y);
  p.lo += x.lo * y;
  return quick_two_sum(p.hi, p.lo);
}

struct ComplexDD {
  DD re, im;

  ComplexDD times(Complex u) const {
    return {re * u.real() + -(im * u.imag()), re * u.imag() + im * u.real()};
  }
  ComplexDD plus(Complex c) const { return {re + DD{c.real(), 0.0}, im + DD{c.imag(), 0.0}}; }
  ComplexDD plus(const ComplexDD& c) const { return {re + c.re, im + c.im}; }
  Complex value() const { return {re.hi + re.lo, im.hi + im.lo}; }
};

struct AccurateEval {
  Complex newton;     // P(z) / P'(z)
  double residual;    // |P(z)| / sum |a_j| |z|^j
};

// Evaluates P and P' at z in double-double. For |z| > 1 the variable is
// scaled by a power of two s >= |z| (exact), evaluating
// B(u) = sum a_j s^(j-n) u^j at u = z/s so that P = s^n B and P' = s^(n-1) B'.
AccurateEval accurate_eval(const std::vector<Complex>& a, Complex z) {
  const int n = static_cast<int>(a.size()) - 1;
  int shift = 0;
  if (std::abs(z) > 1.0) std::frexp(std::abs(z), &shift);
  const Complex u{std::ldexp(z.real(), -shift), std::ldexp(z.imag(), -shift)};
  const double ru = std::abs(u);

  // Common exponent offset keeps the largest scaled coefficient near 1, so
  // wide coefficient ranges do not underflow; it cancels in both outputs.
  int top = std::numeric_limits<int>::min();
  for (int j = 0; j <= n; ++j) {
    const double mag = std::abs(a[j]);
    if (mag != 0.0) top = std::max(top, std::ilogb(mag) + shift * (j - n));
  }
  if (top == std::numeric_limits<int>::min()) top = 0;

  ComplexDD value{}, slope{};
  double scale = 0.0;
  for (int j = n; j >= 0; --j) {
    const int e = shift * (j - n) - top;
    const Complex b{std::ldexp(a[j].real(), e), std::ldexp(a[j].imag(), e)};
    slope = slope.times(u).plus(value);
    value = value.times(u).plus(b);
    scale = scale * ru + std::abs(b);
  }
  const Complex v = value.value();
  const Complex d = slope.value();
  return {std::ldexp(1.0, shift) * (v / d), scale == 0.0 ? 0.0 : std::abs(v) / scale};
}

std::vector<Complex> starting_points(const std::vector<Complex>& a) {
  const std::size_t n = a.size() - 1;
  const double radius = std::pow(std::abs(a.front()) / std::abs(a.back()), 1.0 / static_cast<double>(n));
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) +
                         kStartAngle / static_cast<double>(n) + kStartAngle;
    z[k] = std::polar(radius, angle);
  }
  return z;
}

// Newton steps that are kept only while the residual keeps improving.
Complex polish(const std::vector<Complex>& a, Complex z) {
  AccurateEval cur = accurate_eval(a, z);
  for (int step = 0; step < kPolishSteps && cur.residual > 0.0; ++step) {
    const Complex candidate = z - cur.newton;
    if (!finite(candidate)) break;
    const AccurateEval next = accurate_eval(a, candidate);
    if (!(next.residual < cur.residual)) break;
    z = candidate;
    cur = next;
  }
  return z;
}

}  // namespace

double RootResult::max_residual() const noexcept {
  double worst = 0.0;
  for (double r : residuals) worst = std::max(worst, r);
  return worst;
}

RootResult find_roots(const Polynomial& p, double tol, int max_iter) {
  return find_roots(p, RootOptions{tol, max_iter});
}

RootResult find_roots(const Polynomial& p, const RootOptions& options) {
  if (p.is_zero()) throw InvalidInput("find_roots: zero polynomial has no finite root set");
  if (options.max_iter < 0) throw InvalidInput("find_roots: max_iter must be nonnegative");

  const std::size_t origin = p.origin_multiplicity();
  const Polynomial reduced(std::vector<Complex>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(origin),
                                                p.coeffs().end()));
  const auto& a = reduced.coeffs();
  const std::size_t n = a.size() - 1;

  RootResult result;
  std::vector<Complex> z;
  if (n == 1) {
    z.push_back(-a[0] / a[1]);
  } else if (n > 1) {
    z = starting_points(a);
    std::vector<bool> active(n, true);
    const double floor = 4.0 * static_cast<double>(n) * kEps * kEps;
    std::size_t remaining = n;
    int it = 0;
    while (remaining > 0 && it < options.max_iter) {
      ++it;
      for (std::size_t i = 0; i < n; ++i) {
        if (!active[i]) continue;
        const Complex corr = accurate_eval(a, z[i]).newton;
        Complex repulsion{};
        for (std::size_t j = 0; j < n; ++j) {
          if (j != i) repulsion += 1.0 / (z[i] - z[j]);
        }
        Complex step = corr / (1.0 - corr * repulsion);
        if (!finite(step)) {
          // Stationary point of P or coincident iterates: nudge deterministically.
          step = std::polar(1e-7 * (1.0 + std::abs(z[i])), 0.7 + static_cast<double>(i));
        }
        z[i] -= step;
        if (std::abs(step) <= 2.0 * kEps * std::abs(z[i]) || accurate_eval(a, z[i]).residual <= floor) {
          active[i] = false;
          --remaining;
        }
      }
    }
    result.iterations = it;
    for (std::size_t i = 0; i < n; ++i) {
      double nearest = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) nearest = std::min(nearest, std::abs(z[i] - z[j]));
      }
      if (nearest > kPolishIsolation * (1.0 + std::abs(z[i]))) z[i] = polish(a, z[i]);
    }
  }

  std::vector<Complex> roots(origin, Complex{});
  for (const Complex& root : z) roots.push_back(canonical(root));
  std::stable_sort(roots.begin(), roots.end(), [](Complex lhs, Complex rhs) {
    const double al = std::arg(lhs), ar = std::arg(rhs);
    if (al != ar) return al < ar;
    return std::abs(lhs) < std::abs(rhs);
  });

  result.roots = std::move(roots);
  result.residuals.reserve(result.roots.size());
  for (const Complex& root : result.roots) result.residuals.push_back(normalized_residual(p, root));
  result.converged = std::all_of(result.residuals.begin(), result.residuals.end(),
                                 [&](double r) { return r <= options.tol; });
  return result;
}

double verify_roots(const Polynomial& p, std::span<const Complex> roots) {
  const auto degree = p.degree();
  if (!degree || *degree != roots.size()) {
    throw InvalidInput("verify_roots: number of roots does not match the degree");
  }
  double worst = 0.0;
  for (const Complex& root : roots) worst = std::max(worst, normalized_residual(p, root));

  const Polynomial rebuilt = from_roots(roots, p.leading());
  const double scale = p.max_abs_coeff();
  double deviation = 0.0;
  for (std::size_t j = 0; j <= *degree; ++j) deviation = std::max(deviation, std::abs(rebuilt[j] - p[j]));
  return std::max(worst, deviation / scale);
}

std::vector<std::vector<std::size_t>> group_clusters(std::span<const Complex> roots, double rel_gap) {
  std::vector<std::size_t> parent(roots.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (std::abs(roots[i] - roots[j]) < rel_gap * (1.0 + std::abs(roots[i]))) {
        parent[find(j)] = find(i);
      }
    }
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> slot(roots.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const std::size_t root = find(i);
    if (slot[root] == static_cast<std::size_t>(-1)) {
      slot[root] = groups.size();
      groups.emplace_back();
    }
    groups[slot[root]].push_back(i);
  }
  return groups;
}

}  // namespace raysec
