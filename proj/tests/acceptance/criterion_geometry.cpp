// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include <chrono>
#include <cmath>
#include <cstdio>

#include "acceptance.hpp"
#include "graspkit/geom/hull.hpp"
#include "graspkit/geom/mvee.hpp"
#include "graspkit/geom/polygon.hpp"

namespace acceptance {
namespace {

using namespace graspkit;
using namespace graspkit::geom;

// Independent distance oracle: parametric point-segment clamp plus an
// angle-sum winding test for the sign. The library uses perpendicular
// projection and crossing-number containment, so the two only agree if
// both are right.
double oracle_signed_distance(const Polygon2D& poly, const Vec2& q) {
  const std::size_t n = poly.vertices.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = poly.vertices[i];
    const Vec2 b = poly.vertices[(i + 1) % n];
    const Vec2 ab = b - a;
    const double len2 = ab.squaredNorm();
    const double t = len2 > 0.0 ? std::clamp((q - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
    best = std::min(best, (a + t * ab - q).norm());
  }
  double winding = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = poly.vertices[i] - q;
    const Vec2 b = poly.vertices[(i + 1) % n] - q;
    winding += std::atan2(a.x() * b.y() - a.y() * b.x(), a.dot(b));
  }
  const bool inside = std::abs(winding) > M_PI;  // ~2*pi inside, ~0 outside
  return inside ? best : -best;
}

Polygon2D random_star(Rng& rng) {
  Polygon2D poly;
  const int n = 6 + 2 * int(rng.uniform_int(6));
  for (int i = 0; i < n; ++i) {
    const double th = 2.0 * M_PI * i / n + rng.uniform(-0.1, 0.1);
    const double r = (i % 2 == 0) ? rng.uniform(0.8, 1.2) : rng.uniform(0.35, 0.6);
    poly.vertices.push_back({r * std::cos(th), r * std::sin(th)});
  }
  return poly;
}

}  // namespace

bool geometry_oracles(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(20260817);
  int cases = 0;
  int bad = 0;

  // Concave hull containment: random clouds, random alpha, every point in.
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<Vec2> pts;
    const int n = 30 + int(rng.uniform_int(170));
    const bool clustered = rng.bernoulli(0.4);
    for (int i = 0; i < n; ++i) {
      if (clustered) {
        const double cx = rng.bernoulli(0.5) ? -0.6 : 0.6;
        pts.push_back({cx + rng.normal(0.0, 0.25), rng.normal(0.0, 0.25)});
      } else {
        pts.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1)});
      }
    }
    const double alpha = rng.uniform(0.02, 0.8);
    ++cases;
    try {
      const ConcaveHull hull = concave_hull(pts, alpha);
      for (const auto& p : pts) {
        if (!hull.outer.contains(p, 1e-7)) {
          ++bad;
          break;
        }
      }
    } catch (const Error&) {
      ++bad;
    }
  }

  // Signed distance vs the independent per-edge oracle.
  for (int trial = 0; trial < 50; ++trial) {
    Polygon2D poly = random_star(rng);
    if (!poly.is_simple()) continue;
    for (int k = 0; k < 12; ++k) {
      const Vec2 q(rng.uniform(-1.6, 1.6), rng.uniform(-1.6, 1.6));
      ++cases;
      const double lib = signed_distance(poly, q);
      const double ora = oracle_signed_distance(poly, q);
      if (std::abs(lib) < 1e-7 || std::abs(ora) < 1e-7) continue;  // boundary tie
      if (std::abs(lib - ora) >= 1e-9) ++bad;
    }
  }

  // MVEE containment within (1 + eps) on random clouds.
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<Point3> pts;
    const int n = 10 + int(rng.uniform_int(190));
    const Vec3 scale(rng.uniform(0.02, 0.3), rng.uniform(0.02, 0.3), rng.uniform(0.02, 0.3));
    for (int i = 0; i < n; ++i) {
      pts.push_back(scale.cwiseProduct(Vec3(rng.uniform(-1, 1), rng.uniform(-1, 1),
                                            rng.uniform(-1, 1))));
    }
    const double eps = rng.uniform(1e-4, 0.05);
    ++cases;
    try {
      const Ellipsoid e = mvee(pts, eps);
      for (const auto& p : pts) {
        if (!e.contains(p, eps)) {
          ++bad;
          break;
        }
      }
    } catch (const Error&) {
      ++bad;
    }
  }

  // Known-ellipsoid recovery: center within 1e-3 m, axes within 2%.
  for (int trial = 0; trial < 100; ++trial) {
    Vec3 semi(rng.uniform(0.03, 0.10), rng.uniform(0.03, 0.10), rng.uniform(0.03, 0.10));
    std::sort(semi.data(), semi.data() + 3, std::greater<>());
    const Mat3 rot = Pose::from_axis_angle(rng.unit_vector(), rng.uniform(0.0, M_PI)).rotation;
    const Vec3 center(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    std::vector<Point3> pts;
    for (int i = 0; i < 2500; ++i) {
      pts.push_back(center + rot * semi.cwiseProduct(rng.unit_vector()));
    }
    ++cases;
    const Ellipsoid e = mvee(pts, 1e-4);
    const auto [lengths, dirs] = e.axes();
    bool ok = (e.center - center).norm() < 1e-3;
    for (int i = 0; i < 3; ++i) {
      ok = ok && std::abs(lengths[i] - semi[i]) < 0.02 * semi[i];
    }
    if (!ok) ++bad;
  }

  // Random query points against the polygon oracle bring the case count
  // past the 1,000 mark with convex polygons as well.
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Vec2> pts;
    for (int i = 0; i < 20; ++i) pts.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1)});
    Polygon2D poly;
    try {
      poly = convex_hull_2d(pts);
    } catch (const Error&) {
      continue;
    }
    for (int k = 0; k < 8; ++k) {
      const Vec2 q(rng.uniform(-1.6, 1.6), rng.uniform(-1.6, 1.6));
      ++cases;
      const double lib = signed_distance(poly, q);
      const double ora = oracle_signed_distance(poly, q);
      if (std::abs(lib) < 1e-7 || std::abs(ora) < 1e-7) continue;
      if (std::abs(lib - ora) >= 1e-9) ++bad;
    }
  }

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%d cases, %d failures, %.1f s", cases, bad, secs);
  detail = buf;
  return bad == 0 && cases >= 1000 && secs < 60.0;
}

}  // namespace acceptance
