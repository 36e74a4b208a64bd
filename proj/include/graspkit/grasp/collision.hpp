// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#pragma once

#include "graspkit/geom/kdtree.hpp"
#include "graspkit/geom/voxel.hpp"
#include "graspkit/grasp/tool.hpp"

namespace graspkit::grasp {

// Which obstacle classes the query ignores. Soft voxels are displaceable
// items; strategies that may push neighbors aside ignore them.
enum class IgnoreClass { None, Soft };

// Clearance queries of a tool against one voxel grid. Builds a kd-tree over
// the obstacle voxel centers once; each query runs branch-and-bound on the
// distance to the tool's swept boxes.
class CollisionChecker {
 public:
  CollisionChecker(const geom::VoxelGrid& grid, IgnoreClass ignore);

  // Min distance from the tool's swept boxes to any obstacle voxel center,
  // minus half the voxel diagonal. Negative means collision; +infinity when
  // the grid holds no obstacles.
  double clearance(const Pose& tool_pose, const ToolModel& tool) const;

  bool empty() const { return tree_.empty(); }

 private:
  geom::KdTree3 tree_;
  double half_diag_ = 0.0;
};

// One-shot convenience wrapper around CollisionChecker.
double check_collision(const Pose& tool_pose, const ToolModel& tool,
                       const geom::VoxelGrid& grid, IgnoreClass ignore);

}  // namespace graspkit::grasp
