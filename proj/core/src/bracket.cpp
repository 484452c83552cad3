#include "raysec/theta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace raysec {
namespace {

constexpr double kEndpointNudge = 1e-12;
constexpr double kRefineRelWidth = 1e-12;

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// Sign of a real polynomial at x > 0. Coefficients are scaled by their
// largest magnitude and, for x > 1, the reversed polynomial is evaluated in
// 1/x (x^deg > 0 does not change the sign).
class RealSignEvaluator {
 public:
  explicit RealSignEvaluator(const Polynomial& p) {
    const double scale = p.max_abs_coeff();
    coeffs_.reserve(p.size());
    for (const Complex& c : p.coeffs()) coeffs_.push_back(c.real() / scale);
  }

  double scaled_value(double x) const {
    double acc = 0.0;
    if (x > 1.0) {
      const double w = 1.0 / x;
      for (double c : coeffs_) acc = acc * w + c;
    } else {
      for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    }
    return acc;
  }

  int sign(double x) const { return sign_of(scaled_value(x)); }

  int sign_near_zero() const {
    for (double c : coeffs_) {
      if (c != 0.0) return sign_of(c);
    }
    return 0;
  }

  int sign_at_infinity() const { return coeffs_.empty() ? 0 : sign_of(coeffs_.back()); }

  // Cauchy bound on the moduli of all roots.
  double root_bound() const {
    double worst = 0.0;
    for (std::size_t j = 0; j + 1 < coeffs_.size(); ++j) {
      worst = std::max(worst, std::abs(coeffs_[j] / coeffs_.back()));
    }
    return 1.0 + worst;
  }

 private:
  std::vector<double> coeffs_;
};

double refine(const RealSignEvaluator& h, double lo, double hi, int sign_lo) {
  while (hi - lo > kRefineRelWidth * hi) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    const int s = h.sign(mid);
    if (s == 0) return mid;
    if (s == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

BracketReport bracket_positive_roots(const Polynomial& p, SectionParams params, const ThetaContext& ctx) {
  params.validate();
  if (p.is_zero()) throw InvalidInput("bracket_positive_roots: zero polynomial");
  if (!check_realness(p, 0.0).is_real) {
    throw InvalidInput("bracket_positive_roots: polynomial must have real coefficients");
  }
  const std::size_t n = *p.degree();
  if (ctx.n() != n) throw InvalidInput("bracket_positive_roots: context size differs from the degree");
  if (ctx.m() != params.m) throw InvalidInput("bracket_positive_roots: context modulus differs from m");

  BracketReport report;
  report.in_theorem_scope = params.m == 3 || params.m == 4;
  for (const std::string& w : ctx.warnings()) report.diagnostics.push_back("warning: " + w);
  if (!ctx.satisfies_q_bound()) {
    report.diagnostics.push_back("zeros outside the sector pi - pi/m < |Arg z| with odd m");
  }

  const Polynomial h = rotate_to_H(p, params);
  if (h.is_zero()) {
    report.vacuous = true;
    report.passed = true;
    report.diagnostics.push_back("H is the zero polynomial: no exponent matches r");
    return report;
  }
  const auto r = static_cast<std::size_t>(params.r);
  const auto m = static_cast<std::size_t>(params.m);
  report.expected_count = n >= r ? (n - r) / m : 0;
  report.descartes_count = sign_changes(real_coeffs(h));

  const RealSignEvaluator eval_h(h);
  report.sign_at_zero = eval_h.sign_near_zero();
  report.sign_at_infinity = eval_h.sign_at_infinity();

  const double upper = ctx.theta_upper();
  for (std::size_t k = 1; k <= report.expected_count; ++k) {
    ThetaSample s;
    s.h = static_cast<int>(k);
    s.theta = (static_cast<double>(k) + static_cast<double>(r) / static_cast<double>(m)) * std::numbers::pi;
    if (s.theta >= upper * (1.0 - kEndpointNudge)) s.theta = upper * (1.0 - kEndpointNudge);
    s.x = theta_inverse(ctx, s.theta);
    s.h_sign = eval_h.sign(s.x);
    s.g = normalized_g(ctx, params.r, s.x);
    const int expected = k % 2 == 0 ? 1 : -1;
    if (s.h_sign != expected * report.sign_at_zero) {
      report.alternating = false;
      std::ostringstream os;
      os << "sample h=" << k << " has sign " << s.h_sign << ", expected " << expected * report.sign_at_zero;
      report.diagnostics.push_back(os.str());
    }
    report.theta_samples.push_back(s);
  }

  struct Node {
    double x;
    int sign;
  };
  std::vector<Node> nodes{{0.0, report.sign_at_zero}};
  for (const ThetaSample& s : report.theta_samples) nodes.push_back({s.x, s.h_sign});
  const double last_x = nodes.back().x;
  nodes.push_back({std::max(eval_h.root_bound(), 2.0 * last_x), report.sign_at_infinity});

  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const Node& a = nodes[i];
    const Node& b = nodes[i + 1];
    if (b.sign == 0 && i + 1 < nodes.size() - 1) {
      report.refined_roots.push_back(b.x);
      continue;
    }
    if (a.sign == 0 || b.sign == 0 || a.sign == b.sign) continue;
    const bool endpoint = i == 0 || i + 2 == nodes.size();
    report.brackets.push_back({a.x, b.x, endpoint ? BracketSource::Endpoint : BracketSource::BetweenSamples});
    report.refined_roots.push_back(refine(eval_h, a.x, b.x, a.sign));
  }
  std::sort(report.refined_roots.begin(), report.refined_roots.end());

  report.passed = report.refined_roots.size() == report.expected_count &&
                  report.descartes_count == report.expected_count;
  if (report.refined_roots.size() != report.expected_count) {
    std::ostringstream os;
    os << "located " << report.refined_roots.size() << " positive zeros of H, expected "
       << report.expected_count;
    report.diagnostics.push_back(os.str());
  }
  if (report.descartes_count != report.expected_count) {
    std::ostringstream os;
    os << "Descartes count " << report.descartes_count << " differs from expected " << report.expected_count;
    report.diagnostics.push_back(os.str());
  }
  return report;
}

}  // namespace raysec
