#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "raysec/multisection.hpp"
#include "raysec/poly.hpp"
#include "raysec/rootfind.hpp"

namespace raysec {

/// Zeros z_j of a real polynomial together with the modulus m, plus their
/// polar data. All zeros must lie in the open left half plane and the set
/// must be closed under conjugation.
class ThetaContext {
 public:
  /// Throws InvalidInput if m < 2, any zero has Re z >= 0, or the set is
  /// not conjugate-closed to within 1e-9 (1 + max |z|).
  ThetaContext(std::vector<Complex> zeros, int m);

  /// Oracle zeros of p, snapped to an exactly conjugate-closed set:
  /// near-real roots become real and each upper-half-plane root is paired
  /// with its own conjugate.
  static ThetaContext from_polynomial(const Polynomial& p, int m, const RootOptions& options = {});

  std::span<const Complex> zeros() const noexcept { return zeros_; }
  int m() const noexcept { return m_; }
  std::size_t n() const noexcept { return zeros_.size(); }
  double modulus(std::size_t j) const { return std::abs(zeros_[j]); }
  double phase(std::size_t j) const { return std::arg(zeros_[j]); }

  /// True when every zero satisfies pi - pi/m < |Arg z|, or m is even.
  /// These are the configurations for which q_product is <= 1.
  bool satisfies_q_bound() const noexcept { return q_bound_; }
  /// Zeros sitting on or within 1e-12 of the edge |Arg z| = pi - pi/m.
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// Upper end n pi / m of the range of theta_map.
  double theta_upper() const noexcept;

 private:
  std::vector<Complex> zeros_;
  int m_;
  bool q_bound_ = true;
  std::vector<std::string> warnings_;
};

/// prod_j |omega_k x - z_j| / |omega_0 x - conj(z_j)| for 0 <= k < m, x > 0.
double q_product(const ThetaContext& ctx, int k, double x);

/// Theta(x) = sum_j Arg(omega_1 x - z_j). Strictly increasing from 0 to
/// n pi / m on (0, inf).
double theta_map(const ThetaContext& ctx, double x);

/// The x > 0 with Theta(x) = target, by bisection on a bracket grown by
/// doubling/halving from x = 1. Throws InvalidInput unless
/// 0 < target < n pi / m.
double theta_inverse(const ThetaContext& ctx, double target);

/// Real part of sum_k omega_k^{-r} prod_j (omega_k x - z_j) / |omega_1 x - z_j|,
/// i.e. m H(x) normalized by a positive factor for monic P.
double normalized_g(const ThetaContext& ctx, int r, double x);

struct ThetaSample {
  int h = 0;
  double theta = 0.0;
  double x = 0.0;
  int h_sign = 0;
  double g = 0.0;
};

enum class BracketSource { BetweenSamples, Endpoint };

struct RootBracket {
  double lo = 0.0;
  double hi = 0.0;
  BracketSource source = BracketSource::BetweenSamples;
};

struct BracketReport {
  std::vector<ThetaSample> theta_samples;
  int sign_at_zero = 0;      // sign of H(0+)
  int sign_at_infinity = 0;  // sign of the leading coefficient of H
  std::vector<RootBracket> brackets;
  std::vector<double> refined_roots;
  std::size_t expected_count = 0;
  std::size_t descartes_count = 0;
  bool alternating = true;
  bool in_theorem_scope = true;  // m in {3, 4}
  bool vacuous = false;
  bool passed = false;
  std::vector<std::string> diagnostics;
};

/// Locates the positive zeros of H = rotate_to_H(P) with the Theta-map:
/// samples x_h = theta_inverse((h + r/m) pi), h = 1..floor((n - r)/m), where
/// H has sign (-1)^h, then bisects every sign change among
/// 0+, x_1, ..., x_K, +inf to 1e-12 relative width.
///
/// Passes iff the refined count, floor((n - r)/m) and the Descartes count
/// of H all agree. Throws InvalidInput if P is not real or ctx does not
/// match P's degree and m.
BracketReport bracket_positive_roots(const Polynomial& p, SectionParams params, const ThetaContext& ctx);

}  // namespace raysec
