// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include "planner_common.hpp"

#include "graspkit/geom/surface.hpp"

namespace graspkit::grasp::detail {

Pose front_frame(const scene::Observation& obs, double patch_fraction) {
  const Point3 c = centroid(obs.target_cloud.points);
  Vec3 view = c - obs.camera_pose.translation;
  if (view.norm() < 1e-9) view = obs.camera_pose.rotation.col(2);
  return geom::estimate_item_pose(obs.target_cloud, patch_fraction, view.normalized());
}

Vec3 horizontal_dir(const Point3& from, const Point3& to) {
  Vec3 d = to - from;
  d.z() = 0.0;
  if (d.norm() < 1e-9) return Vec3::UnitX();
  return d.normalized();
}

}  // namespace graspkit::grasp::detail
