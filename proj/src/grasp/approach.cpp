// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "graspkit/geom/mvee.hpp"
#include "graspkit/grasp/planners.hpp"
#include "planner_common.hpp"

namespace graspkit::grasp {

namespace {

constexpr double kMinRayZ = 0.15;        // keep approaches above the horizon
constexpr double kSurfaceSink = 0.02;    // contact plane depth past the shell
constexpr double kClearanceBucket = 0.005;

}  // namespace

std::vector<GraspCandidate> approach_3d(const scene::Observation& obs, const ToolModel& tool,
                                        int n_rays, std::uint64_t seed) {
  if (tool.kind != ToolKind::Gripper) throw ConfigError("approach_3d: needs a gripper");
  if (n_rays <= 0) throw ConfigError("approach_3d: n_rays must be > 0");

  const geom::Ellipsoid ell = geom::mvee(obs.target_cloud);
  const Mat3 a_inv = ell.A.inverse();
  const detail::Field field(obs);
  Rng rng(seed);

  std::vector<GraspCandidate> out;
  std::vector<double> verticality;
  for (int i = 0; i < n_rays; ++i) {
    const double z = rng.uniform(kMinRayZ, 1.0);
    const double phi = rng.uniform(0.0, 2.0 * M_PI);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const Vec3 u(r * std::cos(phi), r * std::sin(phi), z);
    const Vec3 approach = -u;

    // Jaw axis: thin direction of the ellipsoid's shadow on the plane
    // normal to the ray. Width along w is 2 sqrt(w^T A^-1 w).
    const Pose ray_frame = Pose::from_z_axis(approach, Vec3::UnitX());
    const Vec3 e1 = ray_frame.rotation.col(0);
    const Vec3 e2 = ray_frame.rotation.col(1);
    Eigen::Matrix2d shadow;
    shadow(0, 0) = e1.dot(a_inv * e1);
    shadow(0, 1) = e1.dot(a_inv * e2);
    shadow(1, 0) = shadow(0, 1);
    shadow(1, 1) = e2.dot(a_inv * e2);
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(shadow);
    const double gap = 2.0 * std::sqrt(std::max(0.0, eig.eigenvalues()(0)));
    if (gap > tool.stroke || !(gap > 1e-5)) continue;
    const Eigen::Vector2d thin = eig.eigenvectors().col(0);
    const Vec3 jaw = (thin.x() * e1 + thin.y() * e2).normalized();

    const double denom = std::sqrt(u.dot(ell.A * u));
    if (!(denom > 1e-12)) continue;
    const Point3 shell = ell.center + u / denom;
    const Pose pose = Pose::from_z_axis(approach, jaw, shell + kSurfaceSink * approach);

    // Pile neighbors are not pushable from above: gate on everything.
    const double clear = field.all.clearance(pose, tool);
    if (clear < 0.0) continue;

    GraspCandidate cand;
    cand.strategy = StrategyKind::Approach3D;
    cand.tool = ToolKind::Gripper;
    cand.context = GraspContext::Pile;
    cand.grasp_pose = pose;
    cand.contacts = {
        {pose.translation + 0.5 * gap * jaw, jaw},
        {pose.translation - 0.5 * gap * jaw, -jaw},
    };
    cand.gap = gap;
    cand.clearance = clear;
    cand.score = clear;
    out.push_back(std::move(cand));
    verticality.push_back(z);
  }
  if (out.empty()) throw NoCandidates("approach_3d: every ray blocked or too wide");

  // Clearance in 5 mm buckets, verticality as tie-break.
  std::vector<std::size_t> order(out.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    const double bl = std::floor(out[l].clearance / kClearanceBucket);
    const double br = std::floor(out[r].clearance / kClearanceBucket);
    if (bl != br) return bl > br;
    return verticality[l] > verticality[r];
  });
  std::vector<GraspCandidate> ranked;
  ranked.reserve(out.size());
  for (std::size_t i : order) ranked.push_back(std::move(out[i]));
  return ranked;
}

}  // namespace graspkit::grasp
