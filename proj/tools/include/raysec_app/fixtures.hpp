#pragma once

#include "raysec/entire.hpp"
#include "raysec/poly.hpp"

namespace raysec::app::fixtures {

/// (z+1+i)^2 (z+1-i)^2 (z+1)^3 (z+4+2i)(z+4-2i), expanded.
Polynomial degree9();
/// Its zeros, with multiplicity.
std::vector<Complex> degree9_roots();
/// ((z+1)^2 + 10^2)^3, expanded from its roots -1 +- 10i.
Polynomial counterexample();
/// The m = 3, r = 0 section of counterexample(): z^6 + 1220 z^3 + 1030301.
Polynomial counterexample_section();
/// 2 e^{2z} (1 - z/(-1+i)) (1 - z/(-1-i)) = e^{2z} (z+1+i)(z+1-i).
WeierstrassSpec entire_sector();
/// 2 e^{z^2+2z} (1 - z/(-1+i)) (1 - z/(-1-i)).
WeierstrassSpec entire_halfplane();

}  // namespace raysec::app::fixtures
