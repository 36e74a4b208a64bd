// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#pragma once

#include "graspkit/grasp/collision.hpp"
#include "graspkit/scene/observe.hpp"

namespace graspkit::grasp::detail {

// Obstacle field shared by the planners: one classified grid, one checker
// per ignore class. `hard` is the pass/fail gate, `all` feeds ranking.
struct Field {
  geom::VoxelGrid grid;
  CollisionChecker hard;
  CollisionChecker all;

  explicit Field(const scene::Observation& obs)
      : grid(scene::classify_voxels(obs, obs.target_id)),
        hard(grid, IgnoreClass::Soft),
        all(grid, IgnoreClass::None) {}
};

inline Point3 centroid(const std::vector<Point3>& pts) {
  Point3 c = Point3::Zero();
  for (const auto& p : pts) c += p;
  return pts.empty() ? c : Point3(c / static_cast<double>(pts.size()));
}

// Dominant-face frame of the target, z pointing off the face toward the
// camera. The tool approach axis is the negated z of this frame.
Pose front_frame(const scene::Observation& obs, double patch_fraction = 0.7);

// Unit horizontal direction from `from` toward `to`; falls back to +x when
// the two coincide in plan view.
Vec3 horizontal_dir(const Point3& from, const Point3& to);

}  // namespace graspkit::grasp::detail
