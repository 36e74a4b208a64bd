// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include <cmath>
#include <cstdio>

#include "acceptance.hpp"
#include "graspkit/geom/registration.hpp"

namespace acceptance {
namespace {

using namespace graspkit;
using namespace graspkit::geom;

std::vector<Point3> random_cloud(Rng& rng, int n) {
  // Box-ish item surface: three visible faces of a cuboid, plus jitter in
  // the sampling so clouds are never gridded.
  const Vec3 half(rng.uniform(0.02, 0.08), rng.uniform(0.02, 0.08), rng.uniform(0.04, 0.12));
  std::vector<Point3> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    const int face = int(rng.uniform_int(3));
    Vec3 p(rng.uniform(-half.x(), half.x()), rng.uniform(-half.y(), half.y()),
           rng.uniform(-half.z(), half.z()));
    if (face == 0) p.x() = half.x();
    if (face == 1) p.y() = -half.y();
    if (face == 2) p.z() = half.z();
    pts.push_back(p);
  }
  return pts;
}

}  // namespace

bool registration_recovery(std::string& detail) {
  Rng rng(7151);
  int cases = 0, bad = 0;
  double worst_t = 0.0, worst_r = 0.0;

  // 100 noise-free cases across the documented initial misalignment range.
  for (int trial = 0; trial < 100; ++trial) {
    const auto src = random_cloud(rng, 350);
    Pose truth = Pose::from_axis_angle(rng.unit_vector(), rng.uniform(0.0, 10.0 * kDeg));
    truth.translation = rng.uniform(0.0, 0.03) * rng.unit_vector();
    std::vector<Point3> tgt(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) tgt[i] = truth.apply(src[i]);

    ++cases;
    try {
      const IcpResult res = icp_register(src, tgt);
      const double terr = (res.delta.translation - truth.translation).norm();
      const double rerr = pose_angle_between(res.delta, truth);
      worst_t = std::max(worst_t, terr);
      worst_r = std::max(worst_r, rerr);
      if (terr >= 1e-3 || rerr >= 0.1 * kDeg) ++bad;
    } catch (const Error&) {
      ++bad;
    }
  }

  // 100 trimmed cases with 5% outliers.
  for (int trial = 0; trial < 100; ++trial) {
    const auto src = random_cloud(rng, 500);
    Pose truth = Pose::from_axis_angle(rng.unit_vector(), rng.uniform(0.0, 8.0 * kDeg));
    truth.translation = rng.uniform(0.0, 0.02) * rng.unit_vector();
    std::vector<Point3> tgt(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) tgt[i] = truth.apply(src[i]);
    for (std::size_t i = 0; i < src.size() / 20; ++i) {
      tgt[rng.uniform_int(tgt.size())] += rng.uniform(0.05, 0.4) * rng.unit_vector();
    }

    ++cases;
    try {
      IcpParams params;
      params.trim_ratio = 0.8;
      const IcpResult res = icp_register(src, tgt, params);
      const double terr = (res.delta.translation - truth.translation).norm();
      const double rerr = pose_angle_between(res.delta, truth);
      if (terr >= 2e-3 || rerr >= 1.0 * kDeg) ++bad;
    } catch (const Error&) {
      ++bad;
    }
  }

  char buf[160];
  std::snprintf(buf, sizeof(buf), "%d cases, %d failures, worst noise-free %.2e m / %.3f deg",
                cases, bad, worst_t, worst_r / kDeg);
  detail = buf;
  return bad == 0 && cases == 200;
}

}  // namespace acceptance
