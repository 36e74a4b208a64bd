// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#pragma once

#include "graspkit/grasp/tool.hpp"
#include "graspkit/scene/types.hpp"

namespace graspkit::grasp {

struct StrategyChoice {
  StrategyKind strategy;
  ToolModel tool;
};

// Deterministic rule cascade mapping an item onto a strategy and tool:
//   glass            -> never grasped
//   bag              -> Side (gripper)
//   handle + >1.5 kg -> HandledItem (gripper; handles carry past the normal
//                       payload, so this rule is not payload-gated)
//   short, wide      -> Pinch (gripper, height < 0.06 and footprint > stroke)
//   non-porous face  -> Suction (mass within lift limit, face fits the cup)
//   fits the stroke  -> Antipodal2D when shelved, Approach3D in a pile
// Rules whose tool is absent from `available_tools` are skipped, so removing
// a tool (e.g. the arm holding a door open) falls through to alternatives.
// Throws Incompatible when nothing fits; ConfigError when no tool is given.
StrategyChoice select_strategy(const scene::ItemSpec& item, const scene::Observation& obs,
                               const std::vector<ToolModel>& available_tools,
                               GraspContext context);

}  // namespace graspkit::grasp
