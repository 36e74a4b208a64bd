// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include "graspkit/geom/registration.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "graspkit/geom/kdtree.hpp"

namespace graspkit::geom {
namespace {

struct Match {
  int src = 0;
  int tgt = 0;
  double d2 = 0.0;
};

// Best rigid transform mapping src[i] onto dst[i] in the least-squares sense.
Pose solve_rigid(const std::vector<Point3>& src, const std::vector<Point3>& dst,
                 const std::vector<Match>& matches, std::size_t keep) {
  Vec3 mu_s = Vec3::Zero(), mu_d = Vec3::Zero();
  for (std::size_t k = 0; k < keep; ++k) {
    mu_s += src[matches[k].src];
    mu_d += dst[matches[k].tgt];
  }
  mu_s /= double(keep);
  mu_d /= double(keep);

  Mat3 h = Mat3::Zero();
  for (std::size_t k = 0; k < keep; ++k) {
    h += (src[matches[k].src] - mu_s) * (dst[matches[k].tgt] - mu_d).transpose();
  }
  Eigen::JacobiSVD<Mat3> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 r = svd.matrixV() * svd.matrixU().transpose();
  if (r.determinant() < 0.0) {
    Mat3 v = svd.matrixV();
    v.col(2) *= -1.0;
    r = v * svd.matrixU().transpose();
  }
  Pose out;
  out.rotation = r;
  out.translation = mu_d - r * mu_s;
  return out;
}

struct RunResult {
  Pose pose;
  double rms = std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool converged = false;
};

RunResult run_icp(const std::vector<Point3>& source, const KdTree3& tree,
                  const std::vector<Point3>& target, const Pose& init,
                  std::size_t keep, const IcpParams& params) {
  Pose pose = init;
  std::vector<Point3> moved(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) moved[i] = pose.apply(source[i]);
  std::vector<Match> matches(source.size());

  double prev_rms = std::numeric_limits<double>::infinity();
  RunResult out;

  for (int iter = 1; iter <= params.max_iters; ++iter) {
    for (std::size_t i = 0; i < moved.size(); ++i) {
      const auto [j, d2] = tree.nearest(moved[i]);
      matches[i] = {int(i), j, d2};
    }
    std::nth_element(matches.begin(), matches.begin() + long(keep) - 1, matches.end(),
                     [](const Match& a, const Match& b) { return a.d2 < b.d2; });

    pose = solve_rigid(source, target, matches, keep);

    double sum = 0.0;
    for (std::size_t k = 0; k < keep; ++k) {
      const Vec3 p = pose.apply(source[matches[k].src]);
      sum += (p - target[matches[k].tgt]).squaredNorm();
    }
    const double rms = std::sqrt(sum / double(keep));
    for (std::size_t i = 0; i < source.size(); ++i) moved[i] = pose.apply(source[i]);

    out.pose = pose;
    out.rms = rms;
    out.iterations = iter;
    if (std::abs(prev_rms - rms) < params.tol) {
      out.converged = true;
      return out;
    }
    prev_rms = rms;
  }
  return out;
}

}  // namespace

IcpResult icp_register(const std::vector<Point3>& source,
                       const std::vector<Point3>& target,
                       const IcpParams& params) {
  if (source.empty() || target.empty()) {
    throw EmptyInput("icp_register: empty cloud");
  }
  if (params.trim_ratio <= 0.0 || params.trim_ratio > 1.0) {
    throw ConfigError("icp_register: trim_ratio must be in (0,1]");
  }
  if (params.max_iters < 1) {
    throw ConfigError("icp_register: max_iters must be positive");
  }
  const std::size_t keep =
      std::max<std::size_t>(3, std::size_t(std::floor(params.trim_ratio * double(source.size()))));
  if (keep > source.size()) {
    throw DegenerateInput("icp_register: fewer than 3 source points after trimming");
  }

  const KdTree3 tree(target);

  // Two deterministic starts: identity, and the centroid shift. Offsets near
  // the top of the supported range often exceed the nearest-neighbour
  // spacing, where the identity start can lock into a shifted association;
  // the centroid start covers that regime. Keep whichever ends lower.
  Vec3 mu_s = Vec3::Zero(), mu_t = Vec3::Zero();
  for (const auto& p : source) mu_s += p;
  for (const auto& p : target) mu_t += p;
  mu_s /= double(source.size());
  mu_t /= double(target.size());
  Pose centroid_init;
  centroid_init.translation = mu_t - mu_s;

  const RunResult a = run_icp(source, tree, target, Pose{}, keep, params);
  const RunResult b = run_icp(source, tree, target, centroid_init, keep, params);
  const RunResult& best = (b.rms < a.rms) ? b : a;

  if (!best.converged) {
    throw ConvergenceFailure("icp_register: residual still improving at iteration cap",
                             best.rms);
  }
  return {best.pose, best.rms, best.iterations};
}

}  // namespace graspkit::geom
