// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include "graspkit/core.hpp"

namespace graspkit {

bool obb_overlap(const Obb& a, const Obb& b, double tolerance) {
  // Standard 15-axis SAT. Boxes separated (or touching within tolerance)
  // along any axis do not count as overlapping.
  const Mat3 ra = a.pose.rotation;
  const Mat3 rb = b.pose.rotation;
  const Vec3 d = b.pose.translation - a.pose.translation;

  std::vector<Vec3> axes;
  axes.reserve(15);
  for (int i = 0; i < 3; ++i) axes.push_back(ra.col(i));
  for (int i = 0; i < 3; ++i) axes.push_back(rb.col(i));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Vec3 c = ra.col(i).cross(rb.col(j));
      if (c.squaredNorm() > 1e-12) axes.push_back(c.normalized());
    }
  }

  for (const auto& axis : axes) {
    double proj_a = 0.0, proj_b = 0.0;
    for (int i = 0; i < 3; ++i) {
      proj_a += a.half[i] * std::abs(axis.dot(ra.col(i)));
      proj_b += b.half[i] * std::abs(axis.dot(rb.col(i)));
    }
    if (std::abs(axis.dot(d)) >= proj_a + proj_b - tolerance) return false;
  }
  return true;
}

}  // namespace graspkit
