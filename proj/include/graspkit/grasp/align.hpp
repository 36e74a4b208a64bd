// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#pragma once

#include "graspkit/core.hpp"

namespace graspkit::grasp {

// Pose delta mapping the observed tool cloud onto its reference model,
// applied downstream as a command correction. Throws DegenerateInput when
// fewer than 50 tool points are visible; lets registration
// ConvergenceFailure propagate (callers record the skip).
Pose correct_tool_pose(const PointCloud& observed_tool_cloud,
                       const PointCloud& reference_tool_cloud);

struct CameraAlignment {
  Pose delta;        // maps chassis-frame points onto the head frame
  double rms = 0.0;  // residual after alignment
};

// Registers the chassis camera cloud onto the head camera cloud. Throws
// AlignmentFailure when the aligned overlap covers less than 20% of the
// smaller cloud or registration diverges.
CameraAlignment align_camera_sources(const PointCloud& head_cloud,
                                     const PointCloud& chassis_cloud);

}  // namespace graspkit::grasp
