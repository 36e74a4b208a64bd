// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#pragma once

#include <vector>

#include "graspkit/core.hpp"
#include "graspkit/geom/polygon.hpp"

namespace graspkit::geom {

// Concave hull of a planar point set. `outer` is a simple CCW polygon that
// contains every input point; `holes` are interior rings (also stored CCW)
// enclosing point-free regions, e.g. the opening of an item handle.
struct ConcaveHull {
  Polygon2D outer;
  std::vector<Polygon2D> holes;
  double alpha_used = 0.0;  // effective alpha after any growth
};

// Alpha shape over a Delaunay triangulation: triangles with circumradius
// <= alpha are kept and the boundary of their union is extracted. If the
// requested alpha fragments the shape, leaves points uncovered, or pinches
// the boundary, alpha is doubled until a single simple outer ring covers
// the input; alpha -> infinity therefore degenerates to the convex hull.
ConcaveHull concave_hull(const std::vector<Vec2>& points, double alpha);

}  // namespace graspkit::geom
