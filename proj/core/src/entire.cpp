#include "raysec/entire.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "raysec/matching.hpp"
#include "raysec/rootfind.hpp"

namespace raysec {
namespace {

constexpr double kConjugateTol = 1e-12;
constexpr int kNewtonIterations = 60;
constexpr double kBoundaryBand = 10.0;  // in units of tol
constexpr double kAcceptStep = 1e-10;
constexpr double kDuplicateTol = 1e-8;
constexpr int kDeflatedIterations = 100;
constexpr int kCountSamples = 2048;
constexpr int kMaxCountDepth = 20;
constexpr double kMaxArgStep = 0.5;
constexpr int kGridRings = 24;
constexpr double kCountMargin = 0.5;
constexpr double kMinLog10Coeff = -290.0;

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

bool conjugate_closed(const std::vector<Complex>& zeros) {
  std::vector<Complex> conj(zeros.size());
  double scale = 0.0;
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    conj[i] = std::conj(zeros[i]);
    scale = std::max(scale, std::abs(zeros[i]));
  }
  return max_matching_distance(zeros, conj) <= kConjugateTol * (1.0 + scale);
}

void basic_checks(const WeierstrassSpec& spec, std::vector<std::string>& out) {
  if (spec.p < 0) out.emplace_back("p must be nonnegative");
  if (!std::isfinite(spec.C)) out.emplace_back("C must be finite");
  if (!(spec.B_eff > 0.0) || !std::isfinite(spec.B_eff)) out.emplace_back("B_eff must be positive");
  if (!(spec.A >= 0.0) || !std::isfinite(spec.A)) out.emplace_back("A must be nonnegative");
  bool zeros_ok = true;
  for (const Complex& z : spec.zeros) {
    if (z == Complex{} || !finite(z)) zeros_ok = false;
  }
  if (!zeros_ok) {
    out.emplace_back("zeros must be finite and nonzero");
  } else if (!conjugate_closed(spec.zeros)) {
    out.emplace_back("zeros must be closed under conjugation");
  }
}

// Directed Hausdorff part: worst distance from a point of `from` to `to`.
double directed_gap(const std::vector<Complex>& from, const std::vector<Complex>& to) {
  double worst = 0.0;
  for (const Complex& p : from) {
    double best = std::numeric_limits<double>::infinity();
    for (const Complex& q : to) best = std::min(best, std::abs(p - q));
    worst = std::max(worst, best);
  }
  return worst;
}

double banded_gap(const std::vector<Complex>& cur_inner, const std::vector<Complex>& cur_all,
                  const std::vector<Complex>& prev_inner, const std::vector<Complex>& prev_all) {
  if (cur_inner.empty() && prev_inner.empty()) return 0.0;
  if (cur_all.empty() || prev_all.empty()) return std::numeric_limits<double>::infinity();
  return std::max(directed_gap(cur_inner, prev_all), directed_gap(prev_inner, cur_all));
}

// Simultaneous Aberth iteration on the closed-form f_r. The repulsion
// between iterates keeps seeds from collapsing onto a shared zero, which
// plain Newton from each seed does when the seeds are coarse.
std::vector<Complex> aberth_refine(const WeierstrassSpec& spec, SectionParams params, std::vector<Complex> z) {
  const std::size_t n = z.size();
  std::vector<bool> active(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    if (z[i] == Complex{}) active[i] = false;  // exact zero of the z^k factor
  }
  for (int it = 0; it < kNewtonIterations; ++it) {
    bool moved = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      const Complex corr = evaluate_entire_section(spec, params, z[i]) /
                           evaluate_entire_section_derivative(spec, params, z[i]);
      Complex repulsion{};
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      const Complex step = corr / (1.0 - corr * repulsion);
      if (!finite(step)) {
        active[i] = false;
        continue;
      }
      z[i] -= step;
      moved = true;
      if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(z[i])) active[i] = false;
    }
    if (!moved) break;
  }
  return z;
}

bool is_zero_of_section(const WeierstrassSpec& spec, SectionParams params, Complex z) {
  if (z == Complex{}) return true;
  const Complex step = evaluate_entire_section(spec, params, z) / evaluate_entire_section_derivative(spec, params, z);
  return finite(step) && std::abs(step) <= kAcceptStep * std::max(1.0, std::abs(z));
}

bool near_any(const std::vector<Complex>& pts, Complex z) {
  for (const Complex& q : pts) {
    if (std::abs(q - z) <= kDuplicateTol * std::max(1.0, std::abs(z))) return true;
  }
  return false;
}

// Number of zeros of f_r inside |z| < rho, from the winding of f_r along
// the circle; steps whose argument jump is large get subdivided.
std::size_t count_zeros(const WeierstrassSpec& spec, SectionParams params, double rho) {
  auto f_at = [&](double t) { return evaluate_entire_section(spec, params, std::polar(rho, t)); };
  double winding = 0.0;
  auto walk = [&](auto&& self, double t0, Complex f0, double t1, Complex f1, int depth) -> void {
    const double d = std::arg(f1 / f0);
    if (std::abs(d) <= kMaxArgStep || depth == kMaxCountDepth) {
      winding += d;
      return;
    }
    const double tm = 0.5 * (t0 + t1);
    const Complex fm = f_at(tm);
    self(self, t0, f0, tm, fm, depth + 1);
    self(self, tm, fm, t1, f1, depth + 1);
  };
  const double h = 2.0 * std::numbers::pi / kCountSamples;
  Complex f0 = f_at(0.0);
  const Complex first = f0;
  for (int i = 1; i <= kCountSamples; ++i) {
    const Complex f1 = i == kCountSamples ? first : f_at(i * h);
    walk(walk, (i - 1) * h, f0, i * h, f1, 0);
    f0 = f1;
  }
  return static_cast<std::size_t>(std::max(0.0, std::round(winding / (2.0 * std::numbers::pi))));
}

// Newton on f_r / prod (z - known), started from z.
std::optional<Complex> deflated_newton(const WeierstrassSpec& spec, SectionParams params,
                                       const std::vector<Complex>& known, Complex z) {
  for (int it = 0; it < kDeflatedIterations; ++it) {
    const Complex f = evaluate_entire_section(spec, params, z);
    if (f == Complex{}) return z;
    Complex ratio = evaluate_entire_section_derivative(spec, params, z) / f;
    for (const Complex& q : known) ratio -= 1.0 / (z - q);
    const Complex step = 1.0 / ratio;
    if (!finite(step)) return std::nullopt;
    z -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(z))) break;
  }
  if (!finite(z) || !is_zero_of_section(spec, params, z)) return std::nullopt;
  return z;
}

struct RefinedSet {
  std::vector<Complex> zeros;
  std::size_t counted = 0;
  bool complete = false;
};

// Zeros of f_r seeded by the section zeros of P_n: Aberth polish, then
// search for whatever the argument count says is still missing inside rho.
RefinedSet refine_on_section(const WeierstrassSpec& spec, SectionParams params, const std::vector<Complex>& seeds,
                             double rho, double reach) {
  RefinedSet out;
  for (const Complex& z : aberth_refine(spec, params, seeds)) {
    if (std::abs(z) <= reach && is_zero_of_section(spec, params, z) && !near_any(out.zeros, z)) out.zeros.push_back(z);
  }
  out.counted = count_zeros(spec, params, rho);
  auto inside = [&] {
    return static_cast<std::size_t>(
        std::count_if(out.zeros.begin(), out.zeros.end(), [&](Complex z) { return std::abs(z) < rho; }));
  };
  auto try_seed = [&](Complex seed) {
    const auto z = deflated_newton(spec, params, out.zeros, seed);
    if (z && std::abs(*z) <= reach && !near_any(out.zeros, *z)) out.zeros.push_back(*z);
  };
  for (const Complex& seed : seeds) {
    if (inside() >= out.counted) break;
    try_seed(seed);
  }
  for (int ring = 1; ring <= kGridRings && inside() < out.counted; ++ring) {
    const double radius = rho * ring / kGridRings;
    const int spokes = 8 * ring;
    for (int k = 0; k < spokes && inside() < out.counted; ++k) {
      try_seed(std::polar(radius, 2.0 * std::numbers::pi * (k + 0.5) / spokes));
    }
  }
  out.complete = inside() == out.counted;
  return out;
}

}  // namespace

ValidationOutcome validate_spec(const WeierstrassSpec& spec, int m) {
  ValidationOutcome out;
  if (m != 3 && m != 4) out.violations.emplace_back("m must be 3 or 4");
  basic_checks(spec, out.violations);
  if (m == 3) {
    if (spec.A != 0.0) out.violations.emplace_back("A must be 0 when m = 3");
    const Region sector = Region::sector(2.0 * std::numbers::pi / 3.0);
    for (const Complex& z : spec.zeros) {
      if (!region_contains(z, sector)) {
        out.violations.emplace_back("zeros must lie in the sector 2pi/3 < |Arg z| <= pi when m = 3");
        break;
      }
    }
  } else if (m == 4) {
    for (const Complex& z : spec.zeros) {
      if (!region_contains(z, Region::left_half_plane())) {
        out.violations.emplace_back("zeros must lie in the open left half plane when m = 4");
        break;
      }
    }
  }
  // Zeros of A z^2 + B_eff z + n scale with n; checking n = 1 covers all n.
  if (spec.B_eff > 0.0 && spec.A >= 0.0) {
    bool left = true;
    if (spec.A == 0.0) {
      left = -1.0 / spec.B_eff < 0.0;
    } else {
      const Complex disc = std::sqrt(Complex(spec.B_eff * spec.B_eff - 4.0 * spec.A, 0.0));
      const Complex r1 = (-spec.B_eff + disc) / (2.0 * spec.A);
      const Complex r2 = (-spec.B_eff - disc) / (2.0 * spec.A);
      left = r1.real() < 0.0 && r2.real() < 0.0;
    }
    if (!left) out.violations.emplace_back("zeros of A z^2 + B_eff z + n must lie in Re z < 0");
  }
  return out;
}

Complex evaluate_entire(const WeierstrassSpec& spec, Complex z) {
  Complex value = std::exp(spec.C + spec.A * z * z + spec.B_eff * z) * std::pow(z, spec.p);
  for (const Complex& zj : spec.zeros) value *= 1.0 - z / zj;
  return value;
}

Complex evaluate_entire_derivative(const WeierstrassSpec& spec, Complex z) {
  const Complex e = std::exp(spec.C + spec.A * z * z + spec.B_eff * z);
  Complex prod = 1.0;
  Complex dprod{};
  for (const Complex& zj : spec.zeros) {
    const Complex factor = 1.0 - z / zj;
    dprod = dprod * factor + prod * (-1.0 / zj);
    prod *= factor;
  }
  const Complex zp = std::pow(z, spec.p);
  const Complex dzp = spec.p == 0 ? Complex{} : static_cast<double>(spec.p) * std::pow(z, spec.p - 1);
  const Complex dexp = 2.0 * spec.A * z + spec.B_eff;
  return e * (dzp * prod + zp * dexp * prod + zp * dprod);
}

Complex evaluate_entire_section(const WeierstrassSpec& spec, SectionParams params, Complex z) {
  params.validate();
  Complex sum{};
  for (int k = 0; k < params.m; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / params.m;
    sum += std::polar(1.0, -angle * params.r) * evaluate_entire(spec, std::polar(1.0, angle) * z);
  }
  return sum / static_cast<double>(params.m);
}

Complex evaluate_entire_section_derivative(const WeierstrassSpec& spec, SectionParams params, Complex z) {
  params.validate();
  Complex sum{};
  for (int k = 0; k < params.m; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / params.m;
    const Complex zeta = std::polar(1.0, angle);
    sum += std::polar(1.0, -angle * params.r) * zeta * evaluate_entire_derivative(spec, zeta * z);
  }
  return sum / static_cast<double>(params.m);
}

Polynomial truncate(const WeierstrassSpec& spec, int n) {
  if (n < 1) throw InvalidInput("truncate: n must be positive");
  std::vector<std::string> problems;
  basic_checks(spec, problems);
  if (!problems.empty()) throw InvalidInput("truncate: invalid spec: " + problems.front());

  const double nd = static_cast<double>(n);
  const Polynomial base{1.0, spec.B_eff / nd, spec.A / nd};
  Polynomial exp_part = Polynomial::constant(std::exp(spec.C));
  for (int i = 0; i < n; ++i) exp_part = exp_part * base;

  Polynomial product = Polynomial::constant(1.0);
  std::size_t upper = 0, lower = 0;
  for (const Complex& zj : spec.zeros) {
    if (zj.imag() == 0.0) {
      product = product * Polynomial{1.0, -1.0 / zj.real()};
    } else if (zj.imag() > 0.0) {
      const Complex inv = 1.0 / zj;
      product = product * Polynomial{1.0, -2.0 * inv.real(), std::norm(inv)};
      ++upper;
    } else {
      ++lower;
    }
  }
  if (upper != lower) throw InvalidInput("truncate: zeros must be closed under conjugation");

  // e^C (top/n)^n must stay a normal double or the degree silently drops
  const double top = spec.A > 0.0 ? spec.A : spec.B_eff;
  const double log10_lead = (spec.C + nd * std::log(top / nd)) / std::numbers::ln10;
  if (log10_lead < kMinLog10Coeff || log10_lead > -kMinLog10Coeff) {
    throw InvalidInput("truncate: coefficients leave double range at n = " + std::to_string(n));
  }
  return Polynomial::monomial(1.0, static_cast<std::size_t>(spec.p)) * exp_part * product;
}

StabilizedZeros section_zeros_in_disk(const WeierstrassSpec& spec, SectionParams params,
                                      const StabilizationOptions& options) {
  params.validate();
  const ValidationOutcome check = validate_spec(spec, params.m);
  if (!check) {
    std::string msg = "section_zeros_in_disk: invalid spec:";
    for (const std::string& v : check.violations) msg += " " + v + ";";
    throw InvalidInput(msg);
  }
  if (!(options.radius > 0.0)) throw InvalidInput("section_zeros_in_disk: radius must be positive");
  if (!(options.tol > 0.0)) throw InvalidInput("section_zeros_in_disk: tol must be positive");
  if (options.schedule.empty()) throw InvalidInput("section_zeros_in_disk: empty schedule");
  for (std::size_t i = 0; i < options.schedule.size(); ++i) {
    if (options.schedule[i] < 1 || (i > 0 && options.schedule[i] <= options.schedule[i - 1])) {
      throw InvalidInput("section_zeros_in_disk: schedule must be positive and increasing");
    }
  }

  const double R = options.radius;
  const double band = kBoundaryBand * options.tol;
  const double keep_radius = R * (1.0 + band);
  // Comparison targets reach past the disk so zeros near the circle still
  // find their partner from the other level.
  const double target_radius = R + 1.0;

  StabilizedZeros result;
  result.disk_radius = R;
  std::vector<Complex> prev_inner, prev_all, prev_raw_inner, prev_raw_all;

  for (std::size_t level = 0; level < options.schedule.size(); ++level) {
    const int n = options.schedule[level];
    const Polynomial section = multisect(truncate(spec, n), params);
    const RootResult found = find_roots(section);

    std::vector<Complex> raw_all;
    for (const Complex& z : found.roots) {
      if (std::abs(z) <= target_radius) raw_all.push_back(z);
    }
    std::vector<Complex> all = raw_all;
    TruncationLevel info;
    if (options.refine) {
      RefinedSet refined = refine_on_section(spec, params, raw_all, R + kCountMargin, target_radius);
      all = std::move(refined.zeros);
      info.counted_zeros = refined.counted;
      info.complete = refined.complete;
    }
    auto inner_of = [&](const std::vector<Complex>& pts) {
      std::vector<Complex> inner;
      for (const Complex& z : pts) {
        if (std::abs(z) <= R - band) inner.push_back(z);
      }
      return inner;
    };
    const std::vector<Complex> inner = inner_of(all);
    const std::vector<Complex> raw_inner = inner_of(raw_all);

    info.n = n;
    info.oracle_converged = found.converged;
    info.zeros_in_disk = inner.size();
    if (level == 0) {
      info.gap = info.raw_gap = std::numeric_limits<double>::infinity();
    } else {
      info.gap = banded_gap(inner, all, prev_inner, prev_all);
      info.raw_gap = banded_gap(raw_inner, raw_all, prev_raw_inner, prev_raw_all);
    }
    result.levels.push_back(info);

    result.n_final = n;
    result.hausdorff_gap = info.gap;
    result.zeros_in_disk.clear();
    result.boundary_zeros.clear();
    for (const Complex& z : all) {
      const double r = std::abs(z);
      if (r <= R - band) {
        result.zeros_in_disk.push_back(z);
      } else if (r <= keep_radius) {
        result.boundary_zeros.push_back(z);
      }
    }

    if (level > 0 && info.gap <= options.tol) {
      result.stabilized = true;
      break;
    }
    prev_inner = inner;
    prev_all = all;
    prev_raw_inner = raw_inner;
    prev_raw_all = raw_all;
  }

  std::vector<Complex> checked = result.zeros_in_disk;
  checked.insert(checked.end(), result.boundary_zeros.begin(), result.boundary_zeros.end());
  result.report = verify_on_rays(checked, RayFamily{params.m, RayOrientation::NegativeAxisPower}, options.tol);
  return result;
}

}  // namespace raysec
