#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "raysec/rays.hpp"

namespace raysec::app {

struct SvgOptions {
  int size_px = 600;
  std::string title;
};

/// Square SVG 1.1 plot: axes (class "axis"), the family's m rays from the
/// origin to the frame edge (class "ray"), one circle per point (class
/// "zero"). The viewport is the smallest origin-centred square holding all
/// points, padded by 10%. Output is a pure function of the inputs.
std::string render_svg(const std::vector<Complex>& points, const RayFamily& family, const SvgOptions& options = {});

void write_svg(const std::filesystem::path& path, const std::vector<Complex>& points, const RayFamily& family,
               const SvgOptions& options = {});

}  // namespace raysec::app
