// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include "graspkit/grasp/planners.hpp"
#include "planner_common.hpp"

namespace graspkit::grasp {

GraspPlan plan_waypoints(const GraspCandidate& candidate, const scene::Observation& obs,
                         const ToolModel& tool, const std::vector<Pose>& swipe_waypoints,
                         double standoff) {
  if (!(standoff > 0.0)) throw ConfigError("plan_waypoints: standoff must be > 0");

  GraspPlan plan;
  plan.candidate = candidate;
  plan.swipe_waypoints = swipe_waypoints;

  const Vec3 approach = candidate.grasp_pose.rotation.col(2);
  Pose back_off = candidate.grasp_pose;
  back_off.translation -= standoff * approach;
  plan.pre_grasp = {back_off, candidate.grasp_pose};

  plan.extraction_dir =
      candidate.context == GraspContext::Pile ? Vec3::UnitZ() : Vec3(-approach);

  const detail::Field field(obs);
  auto blocked = [&](const Pose& p) { return field.hard.clearance(p, tool) < 0.0; };
  for (const Pose& p : plan.swipe_waypoints) {
    if (blocked(p)) throw PlanFailure("plan_waypoints: swipe waypoint collides");
  }
  for (const Pose& p : plan.pre_grasp) {
    if (blocked(p)) throw PlanFailure("plan_waypoints: pre-grasp waypoint collides");
  }
  return plan;
}

}  // namespace graspkit::grasp
