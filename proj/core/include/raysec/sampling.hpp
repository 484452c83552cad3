#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "raysec/poly.hpp"
#include "raysec/rays.hpp"

namespace raysec {

/// Seeded generator with distribution code written out explicitly, so draws
/// are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Log-uniform on [lo, hi], lo > 0.
  double log_uniform(double lo, double hi);
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer, used to derive independent per-case seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Angular/real-part margin kept between sampled zeros and the region edge.
inline constexpr double kSampleMargin = 0.01;

/// Conjugate-closed zero set of the given size, strictly inside the region
/// with margin: |Arg z| >= alpha + 0.01 for a sector, Re z <= -0.01 |z| for
/// the half plane. Moduli are log-uniform on [0.1, 10]. Odd sizes always
/// contain a negative real zero.
std::vector<Complex> sample_conforming_roots(const Region& region, int degree, std::uint64_t seed);

/// Monic real polynomial with the zeros of sample_conforming_roots, built
/// from real linear and quadratic factors so every imaginary part is 0.
Polynomial sample_conforming_polynomial(const Region& region, int degree, std::uint64_t seed);

/// Real monic polynomial prod (z - root) for a conjugate-closed root set,
/// multiplying real quadratics for the pairs. Throws InvalidInput if the set
/// is not exactly conjugate-closed.
Polynomial real_from_roots(const std::vector<Complex>& roots);

}  // namespace raysec
