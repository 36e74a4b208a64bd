// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include "graspkit/geom/polygon.hpp"

#include <algorithm>
#include <limits>

namespace graspkit::geom {

double Polygon2D::signed_area() const {
  double acc = 0.0;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = vertices[i];
    const Vec2& b = vertices[(i + 1) % n];
    acc += a.x() * b.y() - b.x() * a.y();
  }
  return 0.5 * acc;
}

double Polygon2D::perimeter() const {
  double acc = 0.0;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    acc += (vertices[(i + 1) % n] - vertices[i]).norm();
  }
  return acc;
}

Vec2 Polygon2D::centroid() const {
  // Area-weighted centroid; falls back to vertex mean for zero area.
  double a2 = 0.0;
  Vec2 c = Vec2::Zero();
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& p = vertices[i];
    const Vec2& q = vertices[(i + 1) % n];
    const double cross = p.x() * q.y() - q.x() * p.y();
    a2 += cross;
    c += (p + q) * cross;
  }
  if (std::abs(a2) < 1e-18) {
    c = Vec2::Zero();
    for (const auto& v : vertices) c += v;
    return vertices.empty() ? c : Vec2(c / double(vertices.size()));
  }
  return c / (3.0 * a2);
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 <= 0.0) return (p - a).norm();
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

double boundary_distance(const Polygon2D& poly, const Vec2& p) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = poly.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(best, point_segment_distance(p, poly.vertices[i],
                                                 poly.vertices[(i + 1) % n]));
  }
  return best;
}

bool Polygon2D::contains(const Vec2& p, double tol) const {
  if (tol > 0.0 && boundary_distance(*this, p) <= tol) return true;
  // Crossing number against the half-line toward +x.
  bool inside = false;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2& a = vertices[i];
    const Vec2& b = vertices[j];
    if ((a.y() > p.y()) != (b.y() > p.y())) {
      const double x_cross = a.x() + (p.y() - a.y()) / (b.y() - a.y()) * (b.x() - a.x());
      if (p.x() < x_cross) inside = !inside;
    }
  }
  return inside;
}

double signed_distance(const Polygon2D& poly, const Vec2& p) {
  const double d = boundary_distance(poly, p);
  if (d == 0.0) return 0.0;
  return poly.contains(p, 0.0) ? d : -d;
}

void Polygon2D::reverse() { std::reverse(vertices.begin(), vertices.end()); }

namespace {

bool segments_properly_intersect(const Vec2& a, const Vec2& b, const Vec2& c,
                                 const Vec2& d) {
  const auto cross = [](const Vec2& u, const Vec2& v) {
    return u.x() * v.y() - u.y() * v.x();
  };
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

}  // namespace

bool Polygon2D::is_simple() const {
  const std::size_t n = vertices.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = vertices[i];
    const Vec2& b = vertices[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      // Skip adjacent edges (they share a vertex).
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      if (segments_properly_intersect(a, b, vertices[j], vertices[(j + 1) % n])) {
        return false;
      }
    }
  }
  return true;
}

Polygon2D convex_hull_2d(const std::vector<Vec2>& points) {
  std::vector<Vec2> pts = points;
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vec2& a, const Vec2& b) {
                          return (a - b).norm() < 1e-15;
                        }),
            pts.end());
  const std::size_t n = pts.size();
  if (n < 3) throw DegenerateInput("convex_hull_2d: fewer than 3 distinct points");

  const auto cross = [](const Vec2& o, const Vec2& a, const Vec2& b) {
    return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
  };

  std::vector<Vec2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw DegenerateInput("convex_hull_2d: collinear input");

  Polygon2D out;
  out.vertices = std::move(hull);
  return out;
}

}  // namespace graspkit::geom
