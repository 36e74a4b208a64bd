// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#pragma once

#include <vector>

#include "graspkit/core.hpp"

namespace graspkit::geom {

// Simple polygon with counter-clockwise vertex order (signed area > 0).
struct Polygon2D {
  std::vector<Vec2> vertices;

  double signed_area() const;
  double perimeter() const;
  Vec2 centroid() const;

  // Strict containment test by crossing number; boundary points count as
  // inside within `tol`.
  bool contains(const Vec2& p, double tol = 1e-12) const;

  // O(n^2) self-intersection scan, used by validation and tests.
  bool is_simple() const;

  void reverse();
};

// Signed distance to the polygon boundary: positive inside, negative
// outside, zero on an edge.
double signed_distance(const Polygon2D& poly, const Vec2& p);

// Unsigned distance to the closest boundary edge.
double boundary_distance(const Polygon2D& poly, const Vec2& p);

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b);

// Andrew monotone chain; collinear boundary points are dropped.
Polygon2D convex_hull_2d(const std::vector<Vec2>& points);

}  // namespace graspkit::geom
