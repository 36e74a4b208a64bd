// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include "graspkit/grasp/align.hpp"

#include "graspkit/geom/kdtree.hpp"
#include "graspkit/geom/registration.hpp"

namespace graspkit::grasp {

Pose correct_tool_pose(const PointCloud& observed_tool_cloud,
                       const PointCloud& reference_tool_cloud) {
  if (observed_tool_cloud.size() < 50) {
    throw DegenerateInput("correct_tool_pose: tool view too occluded (< 50 points)");
  }
  if (reference_tool_cloud.empty()) {
    throw EmptyInput("correct_tool_pose: empty reference cloud");
  }
  return geom::icp_register(observed_tool_cloud.points, reference_tool_cloud.points).delta;
}

CameraAlignment align_camera_sources(const PointCloud& head_cloud,
                                     const PointCloud& chassis_cloud) {
  if (head_cloud.empty() || chassis_cloud.empty()) {
    throw AlignmentFailure("align_camera_sources: empty cloud");
  }
  geom::IcpResult res;
  try {
    res = geom::icp_register(chassis_cloud.points, head_cloud.points);
  } catch (const ConvergenceFailure& e) {
    throw AlignmentFailure(std::string("align_camera_sources: ") + e.what());
  }

  // The delta is only trusted when it actually stitches the clouds: at
  // least 20% of the smaller cloud must land within 1 cm of the other.
  const bool head_smaller = head_cloud.size() <= chassis_cloud.size();
  std::vector<Point3> moved = chassis_cloud.points;
  for (auto& p : moved) p = res.delta.apply(p);
  const geom::KdTree3 tree(head_smaller ? moved : head_cloud.points);
  const std::vector<Point3>& probe = head_smaller ? head_cloud.points : moved;
  std::size_t hits = 0;
  for (const auto& p : probe) {
    if (tree.nearest(p).second <= 0.01 * 0.01) ++hits;
  }
  if (double(hits) < 0.2 * double(probe.size())) {
    throw AlignmentFailure("align_camera_sources: aligned overlap under 20%");
  }
  return {res.delta, res.rms};
}

}  // namespace graspkit::grasp
