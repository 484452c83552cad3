#include "raysec/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace raysec {
namespace {

constexpr double kMinModulus = 0.1;
constexpr double kMaxModulus = 10.0;
constexpr double kPairProbability = 0.75;

}  // namespace

Rng::Rng(std::uint64_t seed) : engine_(mix_seed(seed, 0)) {}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

int Rng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<Complex> sample_conforming_roots(const Region& region, int degree, std::uint64_t seed) {
  if (degree < 0) throw InvalidInput("sample_conforming_roots: degree must be nonnegative");
  Rng rng(seed);
  // Smallest admissible |Arg z| including the margin.
  const double min_angle = region.kind() == Region::Kind::Sector
                               ? region.alpha() + kSampleMargin
                               : std::numbers::pi / 2 + std::asin(kSampleMargin) + 1e-9;
  const double max_angle = std::numbers::pi - kSampleMargin;

  std::vector<Complex> roots;
  roots.reserve(static_cast<std::size_t>(degree));
  int remaining = degree;
  while (remaining > 0) {
    const double rho = rng.log_uniform(kMinModulus, kMaxModulus);
    if (remaining >= 2 && rng.uniform() < kPairProbability) {
      const double phi = rng.uniform(min_angle, max_angle);
      const Complex z = std::polar(rho, phi);
      roots.push_back(z);
      roots.push_back(std::conj(z));
      remaining -= 2;
    } else {
      roots.emplace_back(-rho, 0.0);
      remaining -= 1;
    }
  }
  return roots;
}

Polynomial real_from_roots(const std::vector<Complex>& roots) {
  std::vector<Complex> upper, lower;
  Polynomial p = Polynomial::constant(1.0);
  for (const Complex& z : roots) {
    if (z.imag() == 0.0) {
      p = p * Polynomial{-z.real(), 1.0};
    } else if (z.imag() > 0.0) {
      upper.push_back(z);
    } else {
      lower.push_back(std::conj(z));
    }
  }
  auto by_value = [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  };
  std::sort(upper.begin(), upper.end(), by_value);
  std::sort(lower.begin(), lower.end(), by_value);
  if (upper != lower) throw InvalidInput("real_from_roots: root set is not conjugate-closed");
  // Keep the factor order of the input for the quadratic part.
  for (const Complex& z : roots) {
    if (z.imag() > 0.0) p = p * Polynomial{std::norm(z), -2.0 * z.real(), 1.0};
  }
  return p;
}

Polynomial sample_conforming_polynomial(const Region& region, int degree, std::uint64_t seed) {
  return real_from_roots(sample_conforming_roots(region, degree, seed));
}

}  // namespace raysec
