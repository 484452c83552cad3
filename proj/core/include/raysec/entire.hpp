#pragma once

#include <string>
#include <vector>

#include "raysec/multisection.hpp"
#include "raysec/poly.hpp"
#include "raysec/rays.hpp"

namespace raysec {

/// f(z) = z^p e^C exp(A z^2 + B_eff z) prod_j (1 - z / z_j) with a finite,
/// conjugate-closed zero list. B_eff already includes sum_j 1/z_j.
struct WeierstrassSpec {
  int p = 0;
  double A = 0.0;
  double B_eff = 0.0;
  double C = 0.0;
  std::vector<Complex> zeros;
};

struct ValidationOutcome {
  std::vector<std::string> violations;

  bool valid() const noexcept { return violations.empty(); }
  explicit operator bool() const noexcept { return valid(); }
};

/// Checks B_eff > 0, nonzero conjugate-closed zeros, and the region
/// condition: m = 3 needs A = 0 and zeros in 2pi/3 < |Arg z| <= pi; m = 4
/// needs A >= 0 and zeros in Re z < 0. Also checks that the zeros of
/// A z^2 + B_eff z + 1 have negative real part. Each failing clause is
/// reported separately.
ValidationOutcome validate_spec(const WeierstrassSpec& spec, int m);

/// Closed-form f(z) and f'(z).
Complex evaluate_entire(const WeierstrassSpec& spec, Complex z);
Complex evaluate_entire_derivative(const WeierstrassSpec& spec, Complex z);

/// f_r(z) = (1/m) sum_k zeta^{-kr} f(zeta^k z) with zeta = exp(2 pi i/m),
/// and its derivative.
Complex evaluate_entire_section(const WeierstrassSpec& spec, SectionParams params, Complex z);
Complex evaluate_entire_section_derivative(const WeierstrassSpec& spec, SectionParams params, Complex z);

/// P_n(z) = z^p e^C (1 + (A z^2 + B_eff z)/n)^n prod_j (1 - z/z_j), with the
/// product over the whole zero list for every n. Degree is
/// p + n (A = 0) or p + 2n (A > 0), plus the number of zeros.
/// Throws InvalidInput for n < 1 or an invalid spec (basic clauses only:
/// B_eff > 0, A >= 0, nonzero conjugate-closed zeros).
Polynomial truncate(const WeierstrassSpec& spec, int n);

struct TruncationLevel {
  int n = 0;
  std::size_t zeros_in_disk = 0;
  double raw_gap = 0.0;     // vs. previous level, truncation zeros as found
  double gap = 0.0;         // vs. previous level, after refinement on f_r
  bool oracle_converged = true;
  std::size_t counted_zeros = 0;  // zeros of f_r in |z| < R + 1/2 by the argument principle
  bool complete = true;           // refined set reaches that count
};

struct StabilizationOptions {
  double radius = 6.0;
  double tol = 1e-6;
  std::vector<int> schedule{16, 32, 64, 128};
  /// Refine truncation zeros on the closed-form f_r and fill in any zero
  /// the argument count says is missing.
  bool refine = true;
};

struct StabilizedZeros {
  std::vector<Complex> zeros_in_disk;
  std::vector<Complex> boundary_zeros;  // within 10 tol of |z| = R
  double disk_radius = 0.0;
  int n_final = 0;
  double hausdorff_gap = 0.0;
  bool stabilized = false;
  std::vector<TruncationLevel> levels;
  VerificationReport report;
};

/// Zeros of f_r in |z| <= R from the sections of successive truncations
/// P_n. Stops at the first level whose in-disk set is within tol
/// (symmetric Hausdorff) of the previous level's; zeros within 10 tol of
/// the circle are listed but left out of that comparison. The final set is
/// checked against the m negative-orientation rays at tol.
/// Throws InvalidInput if validate_spec rejects spec for params.m.
StabilizedZeros section_zeros_in_disk(const WeierstrassSpec& spec, SectionParams params,
                                      const StabilizationOptions& options = {});

}  // namespace raysec
