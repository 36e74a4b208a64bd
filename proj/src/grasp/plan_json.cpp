// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include <nlohmann/json.hpp>

#include "graspkit/grasp/tool.hpp"

namespace graspkit::grasp {

namespace {

nlohmann::json pose_json(const Pose& pose) {
  const Eigen::Quaterniond q(pose.rotation);
  return {
      {"translation", {pose.translation.x(), pose.translation.y(), pose.translation.z()}},
      {"quaternion", {q.w(), q.x(), q.y(), q.z()}},
  };
}

}  // namespace

std::string plan_to_json(const GraspPlan& plan) {
  nlohmann::json doc;
  const GraspCandidate& c = plan.candidate;
  doc["strategy"] = to_string(c.strategy);
  doc["tool"] = to_string(c.tool);
  doc["context"] = to_string(c.context);
  doc["grasp_pose"] = pose_json(c.grasp_pose);
  doc["score"] = c.score;
  doc["clearance"] = c.clearance;
  doc["gap"] = c.gap;
  doc["fixed_orientation"] = c.fixed_orientation;
  doc["contacts"] = nlohmann::json::array();
  for (const Contact& ct : c.contacts) {
    doc["contacts"].push_back({
        {"point", {ct.point.x(), ct.point.y(), ct.point.z()}},
        {"normal", {ct.normal.x(), ct.normal.y(), ct.normal.z()}},
    });
  }
  doc["waypoints"] = nlohmann::json::array();
  for (const Pose& p : plan.swipe_waypoints) doc["waypoints"].push_back(pose_json(p));
  for (const Pose& p : plan.pre_grasp) doc["waypoints"].push_back(pose_json(p));
  doc["extraction_dir"] = {plan.extraction_dir.x(), plan.extraction_dir.y(),
                           plan.extraction_dir.z()};
  return doc.dump(2) + "\n";
}

}  // namespace graspkit::grasp
