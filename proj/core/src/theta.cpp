#include "raysec/theta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "raysec/matching.hpp"

namespace raysec {
namespace {

constexpr double kConjugateTol = 1e-9;
constexpr double kBoundaryWarnTol = 1e-12;
// Oracle roots of a multiple real zero scatter by about eps^(1/mult); this
// is the relative imaginary part below which a root is snapped to the axis.
constexpr double kSnapTol = 1e-3;
constexpr int kMaxBracketDoublings = 1100;

}  // namespace

ThetaContext::ThetaContext(std::vector<Complex> zeros, int m) : zeros_(std::move(zeros)), m_(m) {
  if (m_ < 2) throw InvalidInput("ThetaContext: m must be at least 2");
  double scale = 0.0;
  for (const Complex& z : zeros_) {
    if (!(z.real() < 0.0)) throw InvalidInput("ThetaContext: every zero must satisfy Re z < 0");
    scale = std::max(scale, std::abs(z));
  }
  std::vector<Complex> conj(zeros_.size());
  std::transform(zeros_.begin(), zeros_.end(), conj.begin(), [](Complex z) { return std::conj(z); });
  if (max_matching_distance(zeros_, conj) > kConjugateTol * (1.0 + scale)) {
    throw InvalidInput("ThetaContext: zeros are not closed under conjugation");
  }

  const double edge = std::numbers::pi - std::numbers::pi / m_;
  bool in_sector = true;
  for (const Complex& z : zeros_) {
    const double a = std::abs(std::arg(z));
    if (!(a > edge)) in_sector = false;
    if (std::abs(a - edge) <= kBoundaryWarnTol) {
      std::ostringstream os;
      os.precision(17);
      os << "zero " << z.real() << (z.imag() < 0 ? "" : "+") << z.imag()
         << "i lies on the sector edge |Arg z| = pi - pi/m";
      warnings_.push_back(os.str());
    }
  }
  q_bound_ = in_sector || m_ % 2 == 0;
}

ThetaContext ThetaContext::from_polynomial(const Polynomial& p, int m, const RootOptions& options) {
  const RootResult found = find_roots(p, options);
  std::vector<Complex> roots = found.roots;
  const std::size_t n = roots.size();

  auto rel_imag = [](Complex z) { return std::abs(z.imag()) / (1.0 + std::abs(z)); };
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rel_imag(roots[a]) < rel_imag(roots[b]); });

  double scale = 0.0;
  for (const Complex& z : roots) scale = std::max(scale, std::abs(z));

  for (std::size_t reals = n % 2; reals <= n; reals += 2) {
    if (reals > 0 && rel_imag(roots[order[reals - 1]]) > kSnapTol) break;
    std::vector<Complex> upper, lower_conj, snapped;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex z = roots[order[i]];
      if (i < reals) {
        snapped.emplace_back(z.real(), 0.0);
      } else if (z.imag() > 0.0) {
        upper.push_back(z);
      } else {
        lower_conj.push_back(std::conj(z));
      }
    }
    if (upper.size() != lower_conj.size()) continue;
    if (max_matching_distance(upper, lower_conj) > kSnapTol * (1.0 + scale)) continue;
    const auto perm = bottleneck_assignment(upper, lower_conj);
    for (std::size_t i = 0; i < upper.size(); ++i) {
      const Complex mid = 0.5 * (upper[i] + lower_conj[perm[i]]);
      snapped.push_back(mid);
      snapped.push_back(std::conj(mid));
    }
    return ThetaContext(std::move(snapped), m);
  }
  throw InvalidInput("ThetaContext: oracle roots are not conjugate-closed");
}

double ThetaContext::theta_upper() const noexcept {
  return static_cast<double>(zeros_.size()) * std::numbers::pi / m_;
}

double q_product(const ThetaContext& ctx, int k, double x) {
  if (k < 0 || k >= ctx.m()) throw InvalidInput("q_product: k must satisfy 0 <= k < m");
  if (!(x > 0.0)) throw InvalidInput("q_product: x must be positive");
  const Complex wk = root_of_minus_one(k, ctx.m()) * x;
  const Complex w0 = root_of_minus_one(0, ctx.m()) * x;
  double prod = 1.0;
  for (const Complex& z : ctx.zeros()) prod *= std::abs(wk - z) / std::abs(w0 - std::conj(z));
  return prod;
}

double theta_map(const ThetaContext& ctx, double x) {
  if (!(x > 0.0)) throw InvalidInput("theta_map: x must be positive");
  const Complex w1 = root_of_minus_one(1, ctx.m()) * x;
  double sum = 0.0;
  for (const Complex& z : ctx.zeros()) sum += std::arg(w1 - z);
  return sum;
}

double theta_inverse(const ThetaContext& ctx, double target) {
  if (!(target > 0.0) || !(target < ctx.theta_upper())) {
    throw InvalidInput("theta_inverse: target must lie strictly inside (0, n pi / m)");
  }
  double lo = 1.0, hi = 1.0;
  for (int i = 0; theta_map(ctx, hi) <= target; ++i) {
    if (i == kMaxBracketDoublings) throw InvalidInput("theta_inverse: target not reachable");
    hi *= 2.0;
  }
  for (int i = 0; theta_map(ctx, lo) >= target; ++i) {
    if (i == kMaxBracketDoublings) throw InvalidInput("theta_inverse: target not reachable");
    lo *= 0.5;
  }
  while (true) {
    const double mid = hi > 4.0 * lo ? std::sqrt(lo) * std::sqrt(hi) : 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    if (theta_map(ctx, mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::abs(theta_map(ctx, lo) - target) <= std::abs(theta_map(ctx, hi) - target) ? lo : hi;
}

double normalized_g(const ThetaContext& ctx, int r, double x) {
  const int m = ctx.m();
  const Complex w1 = root_of_minus_one(1, m) * x;
  Complex sum{};
  for (int k = 0; k < m; ++k) {
    const Complex wk = root_of_minus_one(k, m);
    Complex term = std::pow(wk, -r);
    for (const Complex& z : ctx.zeros()) term *= (wk * x - z) / std::abs(w1 - z);
    sum += term;
  }
  return sum.real();
}

}  // namespace raysec
