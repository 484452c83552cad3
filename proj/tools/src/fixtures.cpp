#include "raysec_app/fixtures.hpp"

#include <cmath>

namespace raysec::app::fixtures {

std::vector<Complex> degree9_roots() {
  return {{-1, -1}, {-1, -1}, {-1, 1}, {-1, 1}, {-1, 0}, {-1, 0}, {-1, 0}, {-4, -2}, {-4, 2}};
}

Polynomial degree9() { return from_roots(degree9_roots(), 1.0); }

Polynomial counterexample() {
  const std::vector<Complex> roots{{-1, 10}, {-1, -10}, {-1, 10}, {-1, -10}, {-1, 10}, {-1, -10}};
  return from_roots(roots, 1.0);
}

Polynomial counterexample_section() {
  return Polynomial{1030301.0, 0.0, 0.0, 1220.0, 0.0, 0.0, 1.0};
}

WeierstrassSpec entire_sector() {
  return WeierstrassSpec{0, 0.0, 2.0, std::log(2.0), {{-1.0, 1.0}, {-1.0, -1.0}}};
}

WeierstrassSpec entire_halfplane() {
  return WeierstrassSpec{0, 1.0, 2.0, std::log(2.0), {{-1.0, 1.0}, {-1.0, -1.0}}};
}

}  // namespace raysec::app::fixtures
