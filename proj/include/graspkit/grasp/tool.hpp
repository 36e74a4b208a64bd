// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#pragma once

#include <string>
#include <vector>

#include "graspkit/core.hpp"

namespace graspkit::grasp {

enum class ToolKind { Gripper, Suction };

enum class StrategyKind { Antipodal2D, Approach3D, HandledItem, Pinch, Side, Suction };

// Where the target sits; drives projection planes and extraction direction.
enum class GraspContext { Shelved, Hanging, Pile };

struct ToolModel {
  ToolKind kind = ToolKind::Gripper;
  double stroke = 0.085;         // max jaw opening (Gripper)
  double cup_diameter = 0.03;    // contact face diameter (Suction)
  double shear_limit = 2.0;      // kg held against lateral load (Suction)
  double lift_limit = 6.0;       // kg held against vertical load (Suction)
  double gripper_payload = 3.0;  // kg

  // Collision geometry in the tool frame: z points along the approach, the
  // origin sits at the contact plane (fingertip closing point / cup face).
  std::vector<Obb> sweep;

  void validate() const {
    if (!(stroke > 0.0)) throw ConfigError("ToolModel: stroke must be > 0");
    if (!(cup_diameter > 0.0) || !(shear_limit > 0.0) || !(lift_limit > 0.0) ||
        !(gripper_payload > 0.0)) {
      throw ConfigError("ToolModel: limits must be > 0");
    }
  }
};

// Parallel-jaw tool with the jaws fully open (how it approaches a grasp):
// finger boxes sit just outside the stroke span, plus palm and wrist bodies.
ToolModel gripper_tool();

// Suction wand: cup-diameter tip, thicker body behind it.
ToolModel suction_tool();

struct Contact {
  Point3 point = Point3::Zero();
  Vec3 normal = Vec3::UnitZ();  // outward surface normal at the contact
};

struct GraspCandidate {
  StrategyKind strategy = StrategyKind::Antipodal2D;
  ToolKind tool = ToolKind::Gripper;
  GraspContext context = GraspContext::Shelved;
  Pose grasp_pose;                 // z along the approach, into the item
  std::vector<Contact> contacts;   // 2 for gripper strategies, 1 for suction
  double score = 0.0;
  double clearance = 0.0;          // meters to the nearest obstacle voxel
  double gap = 0.0;                // jaw opening at contact (Gripper)
  bool fixed_orientation = false;  // keep tool orientation through extraction
};

struct GraspPlan {
  GraspCandidate candidate;
  std::vector<Pose> pre_grasp;        // ordered, last entry is the grasp pose
  Vec3 extraction_dir = Vec3::UnitZ();
  std::vector<Pose> swipe_waypoints;  // Side strategy: precede pre_grasp
};

const char* to_string(StrategyKind s);
const char* to_string(ToolKind k);
const char* to_string(GraspContext c);

// One-way wire format for the simulator and renderers: strategy, tool,
// grasp_pose, waypoints[], extraction_dir, score, clearance.
std::string plan_to_json(const GraspPlan& plan);

}  // namespace graspkit::grasp
