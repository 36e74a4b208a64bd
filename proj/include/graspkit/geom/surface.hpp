// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#pragma once

#include <vector>

#include "graspkit/core.hpp"

namespace graspkit::geom {

// In-plane (x, y) coordinates of each cloud point expressed in the plane
// frame; the out-of-plane component is discarded.
std::vector<Vec2> project_to_plane(const PointCloud& cloud, const Pose& plane_pose);

struct PlaneFit {
  Vec3 centroid = Vec3::Zero();
  Vec3 normal = Vec3::UnitZ();
  double rms = 0.0;
};

// Least-squares plane through a point set (PCA smallest component).
PlaneFit fit_plane(const std::vector<Vec3>& points);

// Dominant-face frame of an item from the central patch of its cloud.
// Trimmed PCA: three rounds discarding the 10% largest plane residuals.
// The z-axis faces the camera (negative dot with view_dir); x is the
// world-horizontal direction projected into the face, ties toward world +x.
Pose estimate_item_pose(const PointCloud& cloud, double patch_fraction,
                        const Vec3& view_dir);

// RMS orthogonal residual of the best-fit plane over the neighborhood of
// `center` with the given radius. Needs >= 6 neighborhood points.
double flatness(const PointCloud& cloud, const Point3& center, double radius);

}  // namespace graspkit::geom
