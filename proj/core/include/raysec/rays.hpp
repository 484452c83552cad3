#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "raysec/poly.hpp"

namespace raysec {

/// Zero-location hypothesis: either the sector alpha < |Arg z| <= pi or the
/// open left half plane Re z < 0.
class Region {
 public:
  enum class Kind { Sector, LeftHalfPlane };

  /// Throws InvalidInput unless pi/2 <= alpha < pi.
  static Region sector(double alpha);
  static Region left_half_plane() { return Region(Kind::LeftHalfPlane, 0.0); }

  Kind kind() const noexcept { return kind_; }
  /// Sector opening; meaningless for the half plane.
  double alpha() const noexcept { return alpha_; }
  std::string describe() const;

 private:
  Region(Kind kind, double alpha) : kind_(kind), alpha_(alpha) {}

  Kind kind_;
  double alpha_;
};

/// Membership with the closed edge at |Arg z| = pi and open edges at alpha
/// or Re z = 0. A positive boundary_tol shrinks the region: by an angle for
/// sectors, by Re z < -tol |z| for the half plane. The origin is never
/// inside.
bool region_contains(Complex z, const Region& region, double boundary_tol = 0.0);

enum class RayOrientation {
  NegativeAxisPower,  // Im z^m = 0, Re z^m <= 0: angles (2k+1) pi / m
  PositiveAxisPower,  // Im z^m = 0, Re z^m >= 0: angles 2 pi k / m
};

struct RayFamily {
  int m = 1;
  RayOrientation orientation = RayOrientation::NegativeAxisPower;

  double angle(int k) const;
  Complex direction(int k) const;
};

/// Distance from z to the nearest of the m closed half-lines.
double ray_distance(Complex z, const RayFamily& family);
/// Index of the ray realizing ray_distance.
int nearest_ray(Complex z, const RayFamily& family);

struct ZeroDistance {
  Complex zero;
  int ray_index = 0;
  double absolute = 0.0;
  double relative = 0.0;  // absolute / (1 + |zero|)
};

struct VerificationReport {
  std::vector<ZeroDistance> per_zero;
  double max_relative_distance = 0.0;
  double tolerance = 0.0;
  bool passed = true;
};

/// Passes iff every relative distance is <= tol; empty input passes.
VerificationReport verify_on_rays(std::span<const Complex> roots, const RayFamily& family, double tol);

}  // namespace raysec
