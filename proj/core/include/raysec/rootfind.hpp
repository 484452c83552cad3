#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "raysec/poly.hpp"

namespace raysec {

struct RootOptions {
  double tol = 1e-12;  // normalized residual
  int max_iter = 200;
};

/// All complex zeros of a polynomial, listed with multiplicity.
///
/// Roots are ordered by nondecreasing argument in (-pi, pi], ties broken by
/// modulus. residuals[i] is normalized_residual(P, roots[i]). When
/// converged is true every residual is <= the requested tolerance.
struct RootResult {
  std::vector<Complex> roots;
  std::vector<double> residuals;
  int iterations = 0;
  bool converged = false;

  double max_residual() const noexcept;
};

/// Aberth-Ehrlich simultaneous iteration followed by a Newton polish.
///
/// Exactly-zero low-order coefficients are deflated first and reported as
/// roots at the origin. Starting points sit on a circle of radius
/// |a0/an|^(1/n) at fixed irrational angular offsets, and roots are updated
/// in index order, so results are bitwise reproducible. Throws InvalidInput
/// for the zero polynomial; a nonzero constant has no roots.
RootResult find_roots(const Polynomial& p, const RootOptions& options = {});
RootResult find_roots(const Polynomial& p, double tol, int max_iter);

/// max(worst normalized residual, coefficientwise relative deviation of
/// leading * prod (z - root) from P). Throws InvalidInput when the number
/// of roots differs from the degree.
double verify_roots(const Polynomial& p, std::span<const Complex> roots);

/// Groups roots that sit within rel_gap * (1 + |z|) of each other.
/// Returns one index list per group, groups ordered by first member.
std::vector<std::vector<std::size_t>> group_clusters(std::span<const Complex> roots,
                                                     double rel_gap = 1e-6);

}  // namespace raysec
