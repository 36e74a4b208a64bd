// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include <cmath>

#include "doctest.h"
#include "graspkit/geom/mvee.hpp"

using namespace graspkit;
using namespace graspkit::geom;

namespace {

std::vector<Point3> ellipsoid_surface(const Vec3& semi, const Mat3& rot, const Vec3& center,
                                      int n, Rng& rng) {
  std::vector<Point3> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Vec3 u = rng.unit_vector();
    pts.push_back(center + rot * semi.cwiseProduct(u));
  }
  return pts;
}

}  // namespace

TEST_CASE("mvee of an octahedron is the unit ball") {
  const double a = 0.7;
  std::vector<Point3> pts = {{a, 0, 0}, {-a, 0, 0}, {0, a, 0},
                             {0, -a, 0}, {0, 0, a}, {0, 0, -a}};
  const Ellipsoid e = mvee(pts, 1e-4);
  CHECK(e.center.norm() < 1e-6);
  const auto [lengths, dirs] = e.axes();
  for (int i = 0; i < 3; ++i) CHECK(lengths[i] == doctest::Approx(a).epsilon(1e-3));
  for (const auto& p : pts) {
    CHECK(e.contains(p, 1e-9));
    CHECK(e.mahalanobis2(p) == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("mvee recovers a known ellipsoid") {
  Rng rng(5);
  const Vec3 semi(0.30, 0.18, 0.09);
  const Mat3 rot = Pose::from_axis_angle(Vec3(1, 2, 3).normalized(), 0.8).rotation;
  const Vec3 center(0.4, -0.2, 1.1);
  const auto pts = ellipsoid_surface(semi, rot, center, 4000, rng);

  const Ellipsoid e = mvee(pts, 1e-4);
  CHECK((e.center - center).norm() < 1e-3);
  const auto [lengths, dirs] = e.axes();
  CHECK(lengths[0] == doctest::Approx(semi[0]).epsilon(0.02));
  CHECK(lengths[1] == doctest::Approx(semi[1]).epsilon(0.02));
  CHECK(lengths[2] == doctest::Approx(semi[2]).epsilon(0.02));
  for (const auto& p : pts) CHECK(e.contains(p, 1e-9));
}

TEST_CASE("mvee worst point sits on the boundary") {
  Rng rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Point3> pts;
    for (int i = 0; i < 60; ++i) {
      pts.push_back({rng.uniform(-1, 1), rng.uniform(-0.5, 0.5), rng.uniform(-2, 2)});
    }
    const Ellipsoid e = mvee(pts, 1e-3);
    double worst = 0.0;
    for (const auto& p : pts) worst = std::max(worst, e.mahalanobis2(p));
    CHECK(worst == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("mvee handles a half ellipsoid shell") {
  Rng rng(29);
  const Vec3 semi(0.2, 0.12, 0.08);
  std::vector<Point3> pts;
  while (pts.size() < 2000) {
    const Vec3 u = rng.unit_vector();
    if (u.z() < 0.0) continue;  // camera sees only the top half
    pts.push_back(semi.cwiseProduct(u));
  }
  const Ellipsoid e = mvee(pts, 1e-3);
  for (const auto& p : pts) CHECK(e.contains(p, 1e-9));
  // The fit stays in the right size class: no axis larger than ~1.5x the
  // biggest true semi-axis and the volume is at most the full ellipsoid's.
  const auto [lengths, dirs] = e.axes();
  CHECK(lengths[0] < 1.5 * semi[0]);
  CHECK(e.volume() <= 4.0 / 3.0 * M_PI * semi.prod() * 1.10);
}

TEST_CASE("mvee pads near planar clouds instead of collapsing") {
  Rng rng(31);
  std::vector<Point3> pts;
  for (int i = 0; i < 200; ++i) {
    pts.push_back({rng.uniform(-0.2, 0.2), rng.uniform(-0.1, 0.1), 0.0});
  }
  const Ellipsoid e = mvee(pts, 1e-3);
  const auto [lengths, dirs] = e.axes();
  CHECK(lengths[2] > 1e-4);   // padded, not flat
  CHECK(lengths[2] < 0.01);   // but still thin
  for (const auto& p : pts) CHECK(e.contains(p, 1e-9));
}

TEST_CASE("mvee shrinks or holds under subsetting") {
  Rng rng(37);
  std::vector<Point3> pts;
  for (int i = 0; i < 120; ++i) {
    pts.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
  }
  const Ellipsoid big = mvee(pts, 1e-3);
  std::vector<Point3> subset(pts.begin(), pts.begin() + 60);
  const Ellipsoid small = mvee(subset, 1e-3);
  // Not exactly nested in general, but volume cannot grow much beyond the
  // epsilon slack when points are removed.
  CHECK(small.volume() <= big.volume() * (1.0 + 0.05));
}

TEST_CASE("mvee input validation") {
  CHECK_THROWS_AS(mvee({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, 1e-3), DegenerateInput);
  std::vector<Point3> line = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {4, 0, 0}};
  CHECK_THROWS_AS(mvee(line, 1e-3), DegenerateInput);
  std::vector<Point3> ok = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK_THROWS_AS(mvee(ok, 0.0), ConfigError);
  CHECK_THROWS_AS(mvee(ok, 0.5), ConfigError);
}
