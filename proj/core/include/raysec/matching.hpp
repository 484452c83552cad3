#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "raysec/poly.hpp"

namespace raysec {

/// Bottleneck matching: the smallest d such that a and b can be paired
/// one-to-one with every pair closer than or equal to d. Returns +inf when
/// the sizes differ and 0 for two empty sets.
double max_matching_distance(std::span<const Complex> a, std::span<const Complex> b);

/// Assignment realizing max_matching_distance: a[i] pairs with b[perm[i]].
/// Throws InvalidInput when the sizes differ.
std::vector<std::size_t> bottleneck_assignment(std::span<const Complex> a, std::span<const Complex> b);

/// Symmetric Hausdorff distance; +inf if exactly one set is empty.
double hausdorff_distance(std::span<const Complex> a, std::span<const Complex> b);

/// Bottleneck distance between a multiset and its image under z -> rot * z.
double rotation_asymmetry(std::span<const Complex> points, Complex rot);

}  // namespace raysec
