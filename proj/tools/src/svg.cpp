#include "raysec_app/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "raysec_app/io.hpp"

namespace raysec::app {
namespace {

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  // Avoid "-0.000", which would make otherwise identical plots differ.
  if (std::string(buf) == "-0.000") return "0.000";
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const std::vector<Complex>& points, const RayFamily& family, const SvgOptions& options) {
  double extent = 0.0;
  for (const Complex& z : points) {
    if (std::isfinite(z.real()) && std::isfinite(z.imag())) {
      extent = std::max({extent, std::abs(z.real()), std::abs(z.imag())});
    }
  }
  if (extent == 0.0) extent = 1.0;
  const double half = 1.1 * extent;
  const double px = options.size_px;
  const double c = px / 2.0;
  const double scale = c / half;
  auto sx = [&](double x) { return fixed(c + x * scale); };
  auto sy = [&](double y) { return fixed(c - y * scale); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(options.size_px) +
         "\" height=\"" + std::to_string(options.size_px) + "\" viewBox=\"0 0 " + std::to_string(options.size_px) +
         " " + std::to_string(options.size_px) + "\">\n";
  if (!options.title.empty()) out += "<title>" + escape(options.title) + "</title>\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(options.size_px) + "\" height=\"" +
         std::to_string(options.size_px) + "\" fill=\"white\"/>\n";
  out += "<line class=\"axis\" x1=\"0\" y1=\"" + fixed(c) + "\" x2=\"" + fixed(px) + "\" y2=\"" + fixed(c) +
         "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  out += "<line class=\"axis\" x1=\"" + fixed(c) + "\" y1=\"0\" x2=\"" + fixed(c) + "\" y2=\"" + fixed(px) +
         "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  for (int k = 0; k < family.m; ++k) {
    const Complex u = family.direction(k);
    const double t = half / std::max(std::abs(u.real()), std::abs(u.imag()));
    out += "<line class=\"ray\" x1=\"" + sx(0) + "\" y1=\"" + sy(0) + "\" x2=\"" + sx(t * u.real()) + "\" y2=\"" +
           sy(t * u.imag()) + "\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
  }
  for (const Complex& z : points) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) continue;
    out += "<circle class=\"zero\" cx=\"" + sx(z.real()) + "\" cy=\"" + sy(z.imag()) +
           "\" r=\"3.5\" fill=\"#d62728\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

void write_svg(const std::filesystem::path& path, const std::vector<Complex>& points, const RayFamily& family,
               const SvgOptions& options) {
  write_text(path, render_svg(points, family, options));
}

}  // namespace raysec::app
