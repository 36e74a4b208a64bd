// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include <algorithm>
#include <cmath>
#include <numeric>

#include "graspkit/geom/hull.hpp"
#include "graspkit/geom/surface.hpp"
#include "graspkit/grasp/planners.hpp"
#include "planner_common.hpp"

namespace graspkit::grasp {

namespace {
constexpr double kHullAlpha = 0.03;
constexpr int kMinCloud = 30;
constexpr int kMinPatch = 6;  // plane fit needs this many neighbors
}  // namespace

std::vector<GraspCandidate> suction_plan(const scene::Observation& obs, GraspContext context,
                                         const ToolModel& tool, const SuctionParams& params) {
  if (tool.kind != ToolKind::Suction) throw ConfigError("suction_plan: needs a suction tool");
  if (params.subsample <= 0 || !(params.flat_tol > 0.0)) {
    throw ConfigError("suction_plan: bad params");
  }
  const std::vector<Point3>& pts = obs.target_cloud.points;
  if (int(pts.size()) < kMinCloud) {
    throw DegenerateInput("suction_plan: target cloud under 30 points");
  }

  const Point3 c = detail::centroid(pts);
  const Point3 cam = obs.camera_pose.translation;

  // Projection plane: vertical facing the camera when the item stands on a
  // shelf or hangs, camera-parallel over a pile.
  Pose plane;
  if (context == GraspContext::Pile) {
    Vec3 n = cam - c;
    if (n.norm() < 1e-9) n = Vec3::UnitZ();
    plane = Pose::from_z_axis(n.normalized(), Vec3::UnitX(), c);
  } else {
    const Vec3 n = detail::horizontal_dir(c, cam);
    plane = Pose::from_z_axis(n, Vec3::UnitZ().cross(n), c);
  }

  const std::vector<Vec2> flat = geom::project_to_plane(obs.target_cloud, plane);
  double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
  for (const auto& q : flat) {
    min_x = std::min(min_x, q.x());
    max_x = std::max(max_x, q.x());
    min_y = std::min(min_y, q.y());
    max_y = std::max(max_y, q.y());
  }
  if (std::min(max_x - min_x, max_y - min_y) < tool.cup_diameter) {
    throw TooSmall("suction_plan: face smaller than the cup");
  }

  const geom::ConcaveHull hull = geom::concave_hull(flat, kHullAlpha);

  // Boundary signed distance; interior holes subtract like outer edges.
  std::vector<double> sd(flat.size());
  double sd_max = 0.0;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    double d = geom::signed_distance(hull.outer, flat[i]);
    for (const auto& hole : hull.holes) {
      d = std::min(d, -geom::signed_distance(hole, flat[i]));
    }
    sd[i] = d;
    sd_max = std::max(sd_max, d);
  }
  const double sd_scale = sd_max > 1e-9 ? sd_max : 1.0;
  const double y_span = max_y - min_y > 1e-9 ? max_y - min_y : 1.0;

  std::vector<double> score(flat.size());
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (context == GraspContext::Shelved) {
      score[i] = sd[i] / sd_scale + params.top_bias * (flat[i].y() - min_y) / y_span;
    } else {
      score[i] = sd[i];
    }
  }

  // Deterministic stride subsample, then walk candidates best-first.
  const std::size_t cap = std::size_t(params.subsample);
  const std::size_t stride = std::max<std::size_t>(1, (pts.size() + cap - 1) / cap);
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < pts.size(); i += stride) idx.push_back(i);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t l, std::size_t r) { return score[l] > score[r]; });

  const detail::Field field(obs);
  const double cup_r = tool.cup_diameter / 2.0;
  std::vector<GraspCandidate> out;
  std::vector<Vec3> patch;
  for (std::size_t i : idx) {
    const Point3& p = pts[i];
    patch.clear();
    for (const auto& q : pts) {
      if ((q - p).norm() <= cup_r) patch.push_back(q);
    }
    if (int(patch.size()) < kMinPatch) continue;
    const geom::PlaneFit fit = geom::fit_plane(patch);
    if (fit.rms > params.flat_tol) continue;

    Vec3 normal = fit.normal;
    if (normal.dot(cam - p) < 0.0) normal = -normal;
    const Pose pose = Pose::from_z_axis(-normal, plane.rotation.col(0), p);
    if (field.hard.clearance(pose, tool) < 0.0) continue;

    GraspCandidate cand;
    cand.strategy = StrategyKind::Suction;
    cand.tool = ToolKind::Suction;
    cand.context = context;
    cand.grasp_pose = pose;
    cand.contacts = {{p, normal}};
    cand.score = score[i];
    cand.clearance = field.all.clearance(pose, tool);
    out.push_back(std::move(cand));
  }
  if (out.empty()) throw NoCandidates("suction_plan: no flat, reachable point");
  return out;
}

}  // namespace graspkit::grasp
