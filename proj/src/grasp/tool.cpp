// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include "graspkit/grasp/tool.hpp"

namespace graspkit::grasp {

namespace {

Obb box_at(double x, double y, double z, double hx, double hy, double hz) {
  Obb b;
  b.pose.translation = Point3(x, y, z);
  b.half = Vec3(hx, hy, hz);
  return b;
}

}  // namespace

ToolModel gripper_tool() {
  ToolModel t;
  t.kind = ToolKind::Gripper;
  // Fingers modeled fully open: inner faces sit at +-stroke/2 so anything the
  // open jaws would straddle stays out of the swept volume. Finger length 7cm,
  // contact plane at the tip midpoint.
  const double finger_hx = 0.006;
  const double inner = t.stroke / 2.0;
  t.sweep.push_back(box_at(+(inner + finger_hx), 0.0, -0.035, finger_hx, 0.012, 0.035));
  t.sweep.push_back(box_at(-(inner + finger_hx), 0.0, -0.035, finger_hx, 0.012, 0.035));
  // Palm spans both fingers; wrist trails behind.
  t.sweep.push_back(box_at(0.0, 0.0, -0.090, inner + 2.0 * finger_hx + 0.006, 0.025, 0.020));
  t.sweep.push_back(box_at(0.0, 0.0, -0.160, 0.030, 0.030, 0.050));
  t.validate();
  return t;
}

ToolModel suction_tool() {
  ToolModel t;
  t.kind = ToolKind::Suction;
  t.sweep.push_back(box_at(0.0, 0.0, -0.050, t.cup_diameter / 2.0, t.cup_diameter / 2.0, 0.050));
  t.sweep.push_back(box_at(0.0, 0.0, -0.150, 0.025, 0.025, 0.050));
  t.validate();
  return t;
}

const char* to_string(StrategyKind s) {
  switch (s) {
    case StrategyKind::Antipodal2D: return "antipodal_2d";
    case StrategyKind::Approach3D: return "approach_3d";
    case StrategyKind::HandledItem: return "handled_item";
    case StrategyKind::Pinch: return "pinch";
    case StrategyKind::Side: return "side";
    case StrategyKind::Suction: return "suction";
  }
  return "unknown";
}

const char* to_string(ToolKind k) {
  switch (k) {
    case ToolKind::Gripper: return "gripper";
    case ToolKind::Suction: return "suction";
  }
  return "unknown";
}

const char* to_string(GraspContext c) {
  switch (c) {
    case GraspContext::Shelved: return "shelved";
    case GraspContext::Hanging: return "hanging";
    case GraspContext::Pile: return "pile";
  }
  return "unknown";
}

}  // namespace graspkit::grasp
