#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polyforge/polytope.hpp"

namespace polyforge {

struct RenderSpec {
  enum class Projection { Coords, Schlegel };

  Projection projection = Projection::Coords;
  /// 1-based coordinate axes (two or three) for Coords.
  std::vector<std::size_t> axes{1, 2, 3};
  /// Facet index in convex_hull() order for Schlegel.
  std::size_t facet = 0;
  double width = 480;
  double height = 480;
  bool labels = true;
};

/// Vertices as labelled circles and edges of the exact 1-skeleton as line
/// segments. Three projected axes are drawn with a fixed oblique view.
std::string render_svg(const VPolytope& p, const RenderSpec& spec);

/// Viewpoint for a Schlegel diagram: the facet centroid pushed outward until
/// it lies beyond that facet only.
Vector schlegel_viewpoint(const VPolytope& p, std::size_t facet);

}  // namespace polyforge
