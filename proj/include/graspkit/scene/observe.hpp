// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#pragma once

#include <optional>

#include "graspkit/scene/types.hpp"

namespace graspkit::scene {

// Simulated perception pass standing in for the camera + segmentation stack.
// Samples every item surface, removes points hidden from the camera by voxel
// ray casting, then applies depth noise (truncated at 4 sigma, along the
// viewing ray) and per-point segmentation dropout. The returned voxel grid
// fuses fixture occupancy (Hard) with item occupancy (Soft, target included)
// and loses occupied voxels with probability voxel_dropout.
//
// Returns nullopt on a detection miss: either the random miss fired or no
// target point survived visibility and dropout. Throws InvalidCamera when the
// camera sits inside occupied geometry, ConfigError for an unknown target id.
//
// Deterministic in (scene, camera_pose, target_id, noise, seed). Fridge doors
// are treated as held open and do not occlude.
std::optional<Observation> observe(const Scene& scene, const Pose& camera_pose,
                                   const std::string& target_id, const NoiseParams& noise,
                                   std::uint64_t seed, double resolution = 0.005);

// Obstacle grid for grasp planning. Soft voxels that belong to the target
// (inside its box, or holding one of its observed points) become Free; other
// item voxels stay Soft; fixture and Unknown voxels become Hard. Every
// occupied voxel in the result is exactly one of Hard or Soft.
geom::VoxelGrid classify_voxels(const Observation& obs, const std::string& target_id);

}  // namespace graspkit::scene
