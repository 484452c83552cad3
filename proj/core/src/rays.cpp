#include "raysec/rays.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace raysec {

Region Region::sector(double alpha) {
  if (!(alpha >= std::numbers::pi / 2) || !(alpha < std::numbers::pi)) {
    throw InvalidInput("sector opening must satisfy pi/2 <= alpha < pi");
  }
  return Region(Kind::Sector, alpha);
}

std::string Region::describe() const {
  if (kind_ == Kind::LeftHalfPlane) return "halfplane";
  std::ostringstream os;
  os.precision(17);
  os << "sector:" << alpha_;
  return os.str();
}

bool region_contains(Complex z, const Region& region, double boundary_tol) {
  if (z == Complex{}) return false;
  if (region.kind() == Region::Kind::LeftHalfPlane) {
    return z.real() < -boundary_tol * std::abs(z);
  }
  return std::abs(std::arg(z)) > region.alpha() + boundary_tol;
}

double RayFamily::angle(int k) const {
  const double base = orientation == RayOrientation::NegativeAxisPower ? 2.0 * k + 1.0 : 2.0 * k;
  return base * std::numbers::pi / m;
}

Complex RayFamily::direction(int k) const { return std::polar(1.0, angle(k)); }

namespace {

double distance_to_ray(Complex z, Complex unit) {
  const Complex local = z * std::conj(unit);
  return local.real() >= 0.0 ? std::abs(local.imag()) : std::abs(z);
}

}  // namespace

int nearest_ray(Complex z, const RayFamily& family) {
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (int k = 0; k < family.m; ++k) {
    const double d = distance_to_ray(z, family.direction(k));
    if (d < best_d) {
      best_d = d;
      best = k;
    }
  }
  return best;
}

double ray_distance(Complex z, const RayFamily& family) {
  if (z == Complex{}) return 0.0;
  return distance_to_ray(z, family.direction(nearest_ray(z, family)));
}

VerificationReport verify_on_rays(std::span<const Complex> roots, const RayFamily& family, double tol) {
  VerificationReport report;
  report.tolerance = tol;
  report.per_zero.reserve(roots.size());
  for (const Complex& z : roots) {
    ZeroDistance d;
    d.zero = z;
    d.ray_index = nearest_ray(z, family);
    d.absolute = z == Complex{} ? 0.0 : distance_to_ray(z, family.direction(d.ray_index));
    d.relative = d.absolute / (1.0 + std::abs(z));
    if (std::isnan(d.relative)) d.relative = std::numeric_limits<double>::infinity();
    report.max_relative_distance = std::max(report.max_relative_distance, d.relative);
    report.per_zero.push_back(d);
  }
  report.passed = report.max_relative_distance <= tol;
  return report;
}

}  // namespace raysec
