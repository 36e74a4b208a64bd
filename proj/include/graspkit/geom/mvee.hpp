// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#pragma once

#include <utility>
#include <vector>

#include "graspkit/core.hpp"

namespace graspkit::geom {

// Ellipsoid { x : (x - center)^T A (x - center) <= 1 } with A symmetric
// positive-definite.
struct Ellipsoid {
  Vec3 center = Vec3::Zero();
  Mat3 A = Mat3::Identity();

  double mahalanobis2(const Vec3& x) const {
    const Vec3 d = x - center;
    return d.dot(A * d);
  }
  bool contains(const Vec3& x, double slack = 0.0) const {
    return mahalanobis2(x) <= 1.0 + slack;
  }

  // Semi-axis lengths, descending, and the matching unit directions
  // (columns of the matrix).
  std::pair<Vec3, Mat3> axes() const;
  double volume() const;
};

// Minimum volume enclosing ellipsoid, Khachiyan barycentric ascent with an
// epsilon dual-gap stop. Near-planar clouds are padded by duplicating every
// point offset +/-1 mm along the thin direction before solving; inputs that
// stay rank-deficient after padding are rejected.
Ellipsoid mvee(const std::vector<Vec3>& points, double epsilon = 1e-3);
Ellipsoid mvee(const PointCloud& cloud, double epsilon = 1e-3);

}  // namespace graspkit::geom
