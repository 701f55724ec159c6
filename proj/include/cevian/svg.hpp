#pragma once

#include <span>
#include <string>
#include <vector>

#include "cevian/geom_core.hpp"

namespace cevian {

struct SvgPolygon {
  TriangleTriple triple;
  int color_index;
};

struct ViewBox {
  double min_x;
  double min_y;
  double width;
  double height;
};

struct SvgScene {
  std::vector<SvgPolygon> polygons;
  ViewBox viewbox;
};

/// One polygon per triple, colored by position; the viewbox is the vertex
/// bounding box grown by 5% of its larger side on every edge.
SvgScene make_scene(std::span<const TriangleTriple> triples);

/// SVG 1.1 document. The y axis points up (vertices are mirrored into SVG
/// coordinates). Output depends only on the scene.
std::string render_svg(const SvgScene& scene);

}  // namespace cevian
