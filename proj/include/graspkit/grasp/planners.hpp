// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graspkit/grasp/tool.hpp"
#include "graspkit/scene/types.hpp"

namespace graspkit::grasp {

// All planners work off a single Observation: they classify its voxel grid
// around the target, gate every candidate on Hard-obstacle clearance >= 0,
// and record the all-obstacle clearance on the candidate. Deterministic in
// (obs, seed). Planner-specific failures throw; see each function.

// Parallel-jaw pairs sampled on the boundary of the target's front-face
// concave hull. Candidates keep contact normals within 20 degrees of
// anti-parallel and gap <= stroke; result is sorted by clearance, best
// first. Throws NoCandidates when no sampled pair survives.
std::vector<GraspCandidate> antipodal_2d(const scene::Observation& obs, const ToolModel& tool,
                                         int n_samples, std::uint64_t seed);

// Approach rays sampled over the upper hemisphere of the target's minimum
// enclosing ellipsoid; the jaws close across the ellipsoid's thin shadow
// direction. Neighbor contact is not ignorable here, so candidates are
// gated on all obstacles. Ranked by clearance (5 mm buckets), then by
// approach verticality. Throws NoCandidates when every ray is blocked or
// too wide.
std::vector<GraspCandidate> approach_3d(const scene::Observation& obs, const ToolModel& tool,
                                        int n_rays, std::uint64_t seed);

// Finger-through-handle grasp. Prefers an interior hole of the front-face
// hull (one contact inside the ring, one outside); falls back to the
// keypoint hint when no hole is visible. fixed_orientation is set: the
// tool must keep its orientation through extraction. Throws HandleNotFound
// when there is neither hole nor hint, NoCandidates when all placements
// collide.
GraspCandidate handled_grasp(const scene::Observation& obs, const ToolModel& tool,
                             const std::optional<Point3>& keypoint_hint = std::nullopt);

// Pinch of the top front edge between the jaws, biting `bite` meters past
// the edge. Throws NoCandidates when the top face is occluded or the
// descent is blocked.
GraspCandidate pinch_grasp(const scene::Observation& obs, const ToolModel& tool,
                           double bite = 0.015);

struct SideGrasp {
  GraspCandidate candidate;
  // Sweep-aside waypoints through the neighbor contact region; empty when
  // the chosen corridor is already clear. Executed before the pre-grasp.
  std::vector<Pose> swipe_waypoints;
};

// Side grasp for bags: pick the side (target's left/right) whose approach
// corridor intersects the fewest obstacle voxels, adjusting the approach
// yaw within +-30 degrees. Throws NoCandidates when both sides are blocked
// by Hard obstacles at every angle.
SideGrasp side_grasp(const scene::Observation& obs, const ToolModel& tool);

struct SuctionParams {
  double flat_tol = 0.0015;  // max plane-fit RMS over a cup-radius patch
  double top_bias = 0.5;     // score weight on normalized height (Shelved)
  int subsample = 200;       // candidate points evaluated per plan
};

// Suction candidates ranked by boundary signed distance, plus a height
// bias for shelved items. The face is projected onto a vertical plane for
// Shelved/Hanging and camera-parallel for Pile. Candidates must pass the
// flatness tolerance and Hard-clearance gate; result is sorted by score,
// best first. Throws TooSmall when the face cannot cover the cup,
// NoCandidates when nothing passes.
std::vector<GraspCandidate> suction_plan(const scene::Observation& obs, GraspContext context,
                                         const ToolModel& tool, const SuctionParams& params = {});

// Waypoint chain for an accepted candidate: standoff pose along the
// negative approach axis, then the grasp pose; swipe waypoints (Side) go
// first. Extraction is straight up for Pile, reverse approach otherwise.
// Throws PlanFailure when any waypoint collides with a Hard obstacle.
GraspPlan plan_waypoints(const GraspCandidate& candidate, const scene::Observation& obs,
                         const ToolModel& tool, const std::vector<Pose>& swipe_waypoints = {},
                         double standoff = 0.10);

}  // namespace graspkit::grasp
