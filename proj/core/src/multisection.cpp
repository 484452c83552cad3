#include "raysec/multisection.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace raysec {

SectionParams SectionParams::make(int m, int r) {
  SectionParams p{m, r};
  p.validate();
  return p;
}

void SectionParams::validate() const {
  if (m < 1) throw InvalidInput("section modulus m must be positive, got " + std::to_string(m));
  if (r < 0 || r >= m) {
    throw InvalidInput("section residue r must satisfy 0 <= r < m, got r=" + std::to_string(r) +
                       " m=" + std::to_string(m));
  }
}

Complex root_of_minus_one(int k, int m) {
  return std::polar(1.0, (2.0 * k - 1.0) * std::numbers::pi / m);
}

Polynomial multisect(const Polynomial& p, SectionParams params) {
  params.validate();
  std::vector<Complex> c(p.size());
  for (std::size_t j = static_cast<std::size_t>(params.r); j < c.size(); j += params.m) c[j] = p[j];
  return Polynomial(std::move(c));
}

Polynomial rotate_to_H(const Polynomial& p, SectionParams params) {
  params.validate();
  std::vector<Complex> c(p.size());
  bool flip = false;
  for (std::size_t j = static_cast<std::size_t>(params.r); j < c.size(); j += params.m) {
    c[j] = flip ? -p[j] : p[j];
    flip = !flip;
  }
  return Polynomial(std::move(c));
}

double hformula_check(const Polynomial& p, SectionParams params, Complex z) {
  params.validate();
  Complex sum{};
  for (int k = 0; k < params.m; ++k) {
    const Complex w = root_of_minus_one(k, params.m);
    sum += std::pow(w, -params.r) * eval(p, w * z);
  }
  sum /= static_cast<double>(params.m);
  return std::abs(sum - eval(rotate_to_H(p, params), z));
}

std::vector<Complex> OrbitZeroSet::points() const {
  std::vector<Complex> out(origin_multiplicity, Complex{});
  out.reserve(size());
  for (double x : generators) {
    for (int k = 0; k < m; ++k) {
      out.push_back(std::polar(x, (2.0 * k + 1.0) * std::numbers::pi / m));
    }
  }
  return out;
}

std::vector<Complex> orbit_expand(std::span<const double> generators, SectionParams params) {
  params.validate();
  for (double x : generators) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw InvalidInput("orbit_expand: generators must be positive and finite");
    }
  }
  OrbitZeroSet set{static_cast<std::size_t>(params.r),
                   std::vector<double>(generators.begin(), generators.end()), params.m};
  return set.points();
}

}  // namespace raysec
