#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "raysec/poly.hpp"

namespace raysec {

/// Arithmetic progression j = r (mod m) of retained exponents.
struct SectionParams {
  int m = 1;
  int r = 0;

  /// Throws InvalidInput unless m >= 1 and 0 <= r < m.
  static SectionParams make(int m, int r);
  void validate() const;
};

/// omega_k = exp((2k - 1) pi i / m), the m-th roots of -1 for k = 0..m-1.
Complex root_of_minus_one(int k, int m);

/// P_r: keeps a_j for j = r (mod m), every other coefficient set to 0.
Polynomial multisect(const Polynomial& p, SectionParams params);

/// H(z) = sum_j (-1)^j a_{jm+r} z^{jm+r}, built by sign flips on the
/// section coefficients. Equals exp(-r pi i/m) P_r(exp(pi i/m) z).
/// The zero polynomial is returned when no exponent matches r.
Polynomial rotate_to_H(const Polynomial& p, SectionParams params);

/// | (1/m) sum_k omega_k^{-r} P(omega_k z) - H(z) |, which vanishes
/// identically up to rounding.
double hformula_check(const Polynomial& p, SectionParams params, Complex z);

/// Zero set of P_r implied by positive zeros x of H: the origin repeated r
/// times, then for each x the m points x exp(i pi/m) exp(2 pi i k/m).
struct OrbitZeroSet {
  std::size_t origin_multiplicity = 0;
  std::vector<double> generators;
  int m = 1;

  std::size_t size() const noexcept { return origin_multiplicity + generators.size() * m; }
  std::vector<Complex> points() const;
};

/// Throws InvalidInput for a nonpositive or non-finite generator.
std::vector<Complex> orbit_expand(std::span<const double> generators, SectionParams params);

}  // namespace raysec
