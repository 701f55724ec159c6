#include "cevian/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace cevian {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

// Hue walks once around the color wheel over the whole scene.
std::string stroke_color(int index, std::size_t count) {
  const double hue = 360.0 * static_cast<double>(index) / static_cast<double>(std::max<std::size_t>(count, 1));
  char buf[48];
  std::snprintf(buf, sizeof(buf), "hsl(%.1f,70%%,40%%)", hue);
  return buf;
}

}  // namespace

SvgScene make_scene(std::span<const TriangleTriple> triples) {
  if (triples.empty()) throw std::invalid_argument("SVG scene needs at least one triangle");
  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  SvgScene scene;
  int index = 0;
  for (const auto& t : triples) {
    for (Complex v : t.vertices()) {
      lo_x = std::min(lo_x, v.real());
      hi_x = std::max(hi_x, v.real());
      lo_y = std::min(lo_y, v.imag());
      hi_y = std::max(hi_y, v.imag());
    }
    scene.polygons.push_back({t, index++});
  }
  const double extent = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
  const double pad = 0.05 * extent;
  // viewbox is expressed in SVG coordinates, where y = −Im
  scene.viewbox = {lo_x - pad, -hi_y - pad, hi_x - lo_x + 2 * pad, hi_y - lo_y + 2 * pad};
  return scene;
}

std::string render_svg(const SvgScene& scene) {
  const ViewBox& vb = scene.viewbox;
  const double stroke = 0.004 * std::max(vb.width, vb.height);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + num(vb.min_x) + " " +
         num(vb.min_y) + " " + num(vb.width) + " " + num(vb.height) + "\" width=\"800\" height=\"" +
         num(800.0 * vb.height / vb.width) + "\">\n";
  out += "<g fill=\"none\" stroke-width=\"" + num(stroke) + "\" stroke-linejoin=\"round\">\n";
  for (const auto& poly : scene.polygons) {
    out += "<polygon points=\"";
    for (std::size_t i = 0; i < 3; ++i) {
      const Complex v = poly.triple.vertices()[i];
      if (i) out += ' ';
      out += num(v.real()) + "," + num(-v.imag());
    }
    out += "\" stroke=\"" + stroke_color(poly.color_index, scene.polygons.size()) + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace cevian
