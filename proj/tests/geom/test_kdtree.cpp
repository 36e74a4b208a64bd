// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include <limits>

#include "doctest.h"
#include "graspkit/geom/kdtree.hpp"

using namespace graspkit;
using namespace graspkit::geom;

TEST_CASE("kdtree nearest matches brute force") {
  Rng rng(12);
  std::vector<Vec3> pts;
  for (int i = 0; i < 2000; ++i) {
    pts.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
  }
  const KdTree3 tree(pts);
  for (int k = 0; k < 300; ++k) {
    const Vec3 q(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5));
    const auto [idx, d2] = tree.nearest(q);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : pts) best = std::min(best, (p - q).squaredNorm());
    REQUIRE(idx >= 0);
    CHECK(d2 == doctest::Approx(best).epsilon(1e-12));
    CHECK((pts[idx] - q).squaredNorm() == doctest::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("kdtree min_value matches brute force for 1-Lipschitz functions") {
  Rng rng(14);
  std::vector<Vec3> pts;
  for (int i = 0; i < 1500; ++i) {
    pts.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
  }
  const KdTree3 tree(pts);
  for (int k = 0; k < 100; ++k) {
    const Vec3 anchor(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
    const double offset = rng.uniform(-0.5, 0.5);
    auto f = [&](const Vec3& p) { return (p - anchor).norm() + offset; };
    const double got = tree.min_value(f);
    double want = std::numeric_limits<double>::infinity();
    for (const auto& p : pts) want = std::min(want, f(p));
    CHECK(got == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("kdtree empty behavior") {
  const KdTree3 tree;
  const auto [idx, d2] = tree.nearest(Vec3::Zero());
  CHECK(idx == -1);
  CHECK(std::isinf(d2));
  CHECK(std::isinf(tree.min_value([](const Vec3&) { return 0.0; })));
}
