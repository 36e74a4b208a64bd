// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include "graspkit/grasp/collision.hpp"

#include <cmath>
#include <limits>

namespace graspkit::grasp {

CollisionChecker::CollisionChecker(const geom::VoxelGrid& grid, IgnoreClass ignore) {
  std::vector<Vec3> centers = grid.centers_where([&](geom::VoxelClass c) {
    if (ignore == IgnoreClass::Soft && c == geom::VoxelClass::Soft) return false;
    return geom::is_occupied(c);
  });
  tree_ = geom::KdTree3(std::move(centers));
  half_diag_ = 0.5 * std::sqrt(3.0) * grid.resolution;
}

double CollisionChecker::clearance(const Pose& tool_pose, const ToolModel& tool) const {
  if (tree_.empty()) return std::numeric_limits<double>::infinity();
  std::vector<Obb> world;
  world.reserve(tool.sweep.size());
  for (const auto& box : tool.sweep) {
    world.push_back(Obb{tool_pose.compose(box.pose), box.half});
  }
  const double d = tree_.min_value([&](const Vec3& p) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& box : world) best = std::min(best, box.exterior_distance(p));
    return best;
  });
  return d - half_diag_;
}

double check_collision(const Pose& tool_pose, const ToolModel& tool,
                       const geom::VoxelGrid& grid, IgnoreClass ignore) {
  return CollisionChecker(grid, ignore).clearance(tool_pose, tool);
}

}  // namespace graspkit::grasp
