// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#pragma once

#include <vector>

#include "graspkit/core.hpp"

namespace graspkit::geom {

struct IcpParams {
  int max_iters = 60;
  // Stop when the trimmed RMS improves by less than this between iterations.
  double tol = 1e-10;
  // Fraction of best correspondences kept each iteration.
  double trim_ratio = 0.8;
};

struct IcpResult {
  Pose delta;  // maps source frame onto target frame
  double rms = 0.0;
  int iterations = 0;
};

// Trimmed point-to-point ICP. The initial misalignment between the clouds is
// expected to be small (a few cm / a few degrees); beyond that the nearest
// neighbour association has no basin of attraction and the refinement throws
// ConvergenceFailure with the last residual attached.
IcpResult icp_register(const std::vector<Point3>& source,
                       const std::vector<Point3>& target,
                       const IcpParams& params = {});

}  // namespace graspkit::geom
