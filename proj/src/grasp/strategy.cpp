// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include "graspkit/grasp/strategy.hpp"

#include <algorithm>
#include <array>

namespace graspkit::grasp {

namespace {
constexpr double kHandledMinMass = 1.5;   // kg; lighter handled items grasp normally
constexpr double kPinchMaxHeight = 0.06;  // m
constexpr double kMaxPorosity = 0.3;      // suction seal limit
}  // namespace

StrategyChoice select_strategy(const scene::ItemSpec& item,
                               [[maybe_unused]] const scene::Observation& obs,
                               const std::vector<ToolModel>& available_tools,
                               GraspContext context) {
  if (available_tools.empty()) {
    throw ConfigError("select_strategy: at least one tool must be available");
  }
  const ToolModel* gripper = nullptr;
  const ToolModel* suction = nullptr;
  for (const auto& t : available_tools) {
    if (t.kind == ToolKind::Gripper && gripper == nullptr) gripper = &t;
    if (t.kind == ToolKind::Suction && suction == nullptr) suction = &t;
  }

  if (item.is_glass) {
    throw Incompatible("select_strategy: " + item.id + " is glass and never grasped");
  }

  const double footprint = std::min(item.dims.x(), item.dims.y());
  double mid = item.dims.x();  // second-largest extent: the smaller graspable face side
  {
    Vec3 d = item.dims;
    std::array<double, 3> s{d.x(), d.y(), d.z()};
    std::sort(s.begin(), s.end());
    mid = s[1];
  }

  if (gripper && item.is_bag && item.mass <= gripper->gripper_payload) {
    return {StrategyKind::Side, *gripper};
  }
  if (gripper && item.has_handle && item.mass > kHandledMinMass) {
    return {StrategyKind::HandledItem, *gripper};
  }
  if (gripper && item.dims.z() < kPinchMaxHeight && footprint > gripper->stroke &&
      item.mass <= gripper->gripper_payload) {
    return {StrategyKind::Pinch, *gripper};
  }
  if (suction && item.porosity <= kMaxPorosity && item.mass <= suction->lift_limit &&
      mid >= suction->cup_diameter) {
    return {StrategyKind::Suction, *suction};
  }
  if (gripper && footprint <= gripper->stroke && item.mass <= gripper->gripper_payload) {
    return {context == GraspContext::Pile ? StrategyKind::Approach3D
                                          : StrategyKind::Antipodal2D,
            *gripper};
  }
  throw Incompatible("select_strategy: no strategy fits " + item.id);
}

}  // namespace graspkit::grasp
