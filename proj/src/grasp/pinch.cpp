// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include <algorithm>
#include <cmath>

#include "graspkit/grasp/planners.hpp"
#include "planner_common.hpp"

namespace graspkit::grasp {

namespace {
constexpr double kTopBand = 0.008;    // points within this of max z count as top face
constexpr double kSupport = 0.010;    // contacts must have an observed point this close

bool supported(const std::vector<Point3>& pts, const Point3& c) {
  for (const auto& p : pts) {
    if ((p - c).norm() <= kSupport) return true;
  }
  return false;
}

}  // namespace

GraspCandidate pinch_grasp(const scene::Observation& obs, const ToolModel& tool, double bite) {
  if (tool.kind != ToolKind::Gripper) throw ConfigError("pinch_grasp: needs a gripper");
  if (!(bite > 0.0) || bite > tool.stroke) throw ConfigError("pinch_grasp: bad bite");
  if (obs.target_cloud.empty()) throw EmptyInput("pinch_grasp: empty target cloud");

  const std::vector<Point3>& pts = obs.target_cloud.points;
  double max_z = -std::numeric_limits<double>::infinity();
  for (const auto& p : pts) max_z = std::max(max_z, p.z());

  const Point3 c = detail::centroid(pts);
  const Vec3 h = detail::horizontal_dir(obs.camera_pose.translation, c);

  // Pinch point: the top-band point closest to the camera, snapped up to
  // the true top height so the bite straddles the edge itself.
  double lo = std::numeric_limits<double>::infinity();
  Point3 pinch = Point3::Zero();
  for (const auto& p : pts) {
    if (p.z() < max_z - kTopBand) continue;
    const double d = p.dot(h);
    if (d < lo) {
      lo = d;
      pinch = p;
    }
  }
  pinch.z() = max_z;

  const Vec3 up = Vec3::UnitZ();
  const Vec3 approach = (h - up).normalized();
  const Vec3 jaw = (h + up).normalized();
  const Point3 c_top = pinch + bite * h;
  const Point3 c_front = pinch - bite * up;
  // Both jaw contacts need observed surface behind them. A top rim seen
  // edge-on leaves the top contact unsupported: the face is occluded.
  if (!supported(pts, c_top)) throw NoCandidates("pinch_grasp: top face occluded");
  if (!supported(pts, c_front)) throw NoCandidates("pinch_grasp: front face occluded");
  const Pose pose = Pose::from_z_axis(approach, jaw, 0.5 * (c_top + c_front));

  const detail::Field field(obs);
  if (field.hard.clearance(pose, tool) < 0.0) {
    throw NoCandidates("pinch_grasp: descent onto the edge is blocked");
  }

  GraspCandidate cand;
  cand.strategy = StrategyKind::Pinch;
  cand.tool = ToolKind::Gripper;
  cand.context = GraspContext::Shelved;
  cand.grasp_pose = pose;
  cand.contacts = {{c_top, up}, {c_front, -h}};
  cand.gap = bite * std::sqrt(2.0);
  cand.clearance = field.all.clearance(pose, tool);
  cand.score = cand.clearance;
  return cand;
}

}  // namespace graspkit::grasp
