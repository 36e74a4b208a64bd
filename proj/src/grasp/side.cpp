// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include "graspkit/grasp/planners.hpp"
#include "planner_common.hpp"

namespace graspkit::grasp {

namespace {

constexpr double kSideSink = 0.02;     // contact plane depth past the side face
constexpr double kStandoff = 0.10;     // corridor length behind the grasp
constexpr double kYawStep = M_PI / 18.0;  // 10 degree adjustment steps

// Obstacle voxels (Hard or Soft) whose centers fall inside the approach
// corridor. This is what the side choice minimizes.
int corridor_count(const std::vector<Vec3>& occupied, const Obb& corridor) {
  int count = 0;
  for (const auto& center : occupied) {
    if (corridor.contains(center)) ++count;
  }
  return count;
}

}  // namespace

SideGrasp side_grasp(const scene::Observation& obs, const ToolModel& tool) {
  if (tool.kind != ToolKind::Gripper) throw ConfigError("side_grasp: needs a gripper");
  if (obs.target_cloud.empty()) throw EmptyInput("side_grasp: empty target cloud");

  const Pose front = detail::front_frame(obs);
  const Vec3 side_axis = front.rotation.col(0);  // horizontal, along the face
  const Point3 c = detail::centroid(obs.target_cloud.points);

  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& p : obs.target_cloud.points) {
    const double d = (p - c).dot(side_axis);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }

  const Vec3 look = detail::horizontal_dir(obs.camera_pose.translation, c);
  const Vec3 robot_right = look.cross(Vec3::UnitZ()).normalized();
  const detail::Field field(obs);
  const std::vector<Vec3> occupied = field.grid.occupied_centers();

  struct Config {
    Pose pose;
    Obb corridor;
    int count = 0;
    double hard_clear = 0.0;
  };
  std::optional<Config> best;

  // Robot's right side first so equal scores resolve toward it; yaw 0 first
  // so straight approaches win ties.
  const std::array<double, 2> side_signs = {
      side_axis.dot(robot_right) >= 0.0 ? 1.0 : -1.0,
      side_axis.dot(robot_right) >= 0.0 ? -1.0 : 1.0};
  const std::array<double, 7> yaws = {0.0,           kYawStep,      -kYawStep,
                                      2.0 * kYawStep, -2.0 * kYawStep,
                                      3.0 * kYawStep, -3.0 * kYawStep};
  for (double sign : side_signs) {
    const Vec3 s = sign * side_axis;  // outward side direction
    const double half_span = sign > 0.0 ? hi : -lo;
    const Point3 grasp_at = c + (std::max(half_span, kSideSink) - kSideSink) * s;
    for (double yaw : yaws) {
      const Vec3 approach = Pose::from_axis_angle(Vec3::UnitZ(), yaw).rotate(-s);
      const Vec3 jaw = Vec3::UnitZ().cross(approach).normalized();
      const Pose pose = Pose::from_z_axis(approach, jaw, grasp_at);
      const double hard_clear = field.hard.clearance(pose, tool);
      if (hard_clear < 0.0) continue;

      Obb corridor;
      corridor.pose = Pose::from_z_axis(approach, jaw,
                                        grasp_at - 0.5 * kStandoff * approach);
      corridor.half = Vec3(tool.stroke / 2.0 + 0.015, 0.03, kStandoff / 2.0);
      Config cfg{pose, corridor, corridor_count(occupied, corridor), hard_clear};
      if (!best || cfg.count < best->count ||
          (cfg.count == best->count && cfg.hard_clear > best->hard_clear)) {
        best = cfg;
      }
    }
  }
  if (!best) throw NoCandidates("side_grasp: both sides blocked at every angle");

  SideGrasp out;
  GraspCandidate& cand = out.candidate;
  cand.strategy = StrategyKind::Side;
  cand.tool = ToolKind::Gripper;
  cand.context = GraspContext::Shelved;
  cand.grasp_pose = best->pose;
  const Vec3 jaw = best->pose.rotation.col(0);
  double thickness = 0.0;
  for (const auto& p : obs.target_cloud.points) {
    thickness = std::max(thickness, std::abs((p - c).dot(jaw)));
  }
  cand.gap = std::min(2.0 * thickness, tool.stroke);
  cand.contacts = {
      {best->pose.translation + 0.5 * cand.gap * jaw, jaw},
      {best->pose.translation - 0.5 * cand.gap * jaw, -jaw},
  };
  cand.clearance = field.all.clearance(best->pose, tool);
  cand.score = -double(best->count);

  if (best->count > 0) {
    // Sweep through the contact region: enter the corridor, push along the
    // approach to just short of the grasp.
    const Vec3 approach = best->pose.rotation.col(2);
    for (double back : {0.08, 0.04}) {
      Pose w = best->pose;
      w.translation -= back * approach;
      out.swipe_waypoints.push_back(w);
    }
  }
  return out;
}

}  // namespace graspkit::grasp
