// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include <algorithm>
#include <cmath>

#include "graspkit/geom/hull.hpp"
#include "graspkit/geom/surface.hpp"
#include "graspkit/grasp/planners.hpp"
#include "planner_common.hpp"

namespace graspkit::grasp {

namespace {

constexpr double kHullAlpha = 0.03;
constexpr double kAntipodalCos = 0.93969262078590838;  // cos(20 deg)
constexpr double kFaceSink = 0.03;  // contact plane depth past the front face

struct BoundaryPoint {
  Vec2 p;
  Vec2 outward;  // unit normal of the edge the point sits on
};

// Length-weighted random point on the hull boundary. CCW order puts the
// outward normal at (dy, -dx) of the edge direction.
BoundaryPoint sample_boundary(const geom::Polygon2D& poly, const std::vector<double>& cum,
                              Rng& rng) {
  const double total = cum.back();
  const double s = rng.uniform() * total;
  const std::size_t i =
      std::size_t(std::lower_bound(cum.begin(), cum.end(), s) - cum.begin());
  const std::size_t n = poly.vertices.size();
  const Vec2& a = poly.vertices[i % n];
  const Vec2& b = poly.vertices[(i + 1) % n];
  const double seg = (b - a).norm();
  const double prev = i == 0 ? 0.0 : cum[i - 1];
  const double t = seg < 1e-12 ? 0.0 : std::clamp((s - prev) / seg, 0.0, 1.0);
  const Vec2 dir = seg < 1e-12 ? Vec2(1.0, 0.0) : Vec2((b - a) / seg);
  return {a + t * (b - a), Vec2(dir.y(), -dir.x())};
}

}  // namespace

std::vector<GraspCandidate> antipodal_2d(const scene::Observation& obs, const ToolModel& tool,
                                         int n_samples, std::uint64_t seed) {
  if (tool.kind != ToolKind::Gripper) throw ConfigError("antipodal_2d: needs a gripper");
  if (n_samples <= 0) throw ConfigError("antipodal_2d: n_samples must be > 0");

  const Pose front = detail::front_frame(obs);
  const std::vector<Vec2> flat = geom::project_to_plane(obs.target_cloud, front);
  const geom::ConcaveHull hull = geom::concave_hull(flat, kHullAlpha);
  const geom::Polygon2D& ring = hull.outer;
  if (ring.vertices.size() < 3) throw NoCandidates("antipodal_2d: degenerate hull");

  std::vector<double> cum(ring.vertices.size());
  double run = 0.0;
  for (std::size_t i = 0; i < ring.vertices.size(); ++i) {
    const Vec2& a = ring.vertices[i];
    const Vec2& b = ring.vertices[(i + 1) % ring.vertices.size()];
    run += (b - a).norm();
    cum[i] = run;
  }
  if (!(run > 1e-9)) throw NoCandidates("antipodal_2d: zero-length boundary");

  const detail::Field field(obs);
  const Vec3 approach = -front.rotation.col(2);
  Rng rng(seed);

  std::vector<GraspCandidate> out;
  for (int i = 0; i < n_samples; ++i) {
    const BoundaryPoint a = sample_boundary(ring, cum, rng);
    const BoundaryPoint b = sample_boundary(ring, cum, rng);
    const double gap = (b.p - a.p).norm();
    if (gap > tool.stroke || gap < 1e-4) continue;
    if (a.outward.dot(b.outward) > -kAntipodalCos) continue;
    // The jaws close along the chord, so both normals must also line up
    // with it; this rejects shear-loaded pairs the anti-parallel test
    // alone would admit on wavy boundaries.
    const Vec2 chord = (b.p - a.p) / gap;
    if (chord.dot(b.outward) < kAntipodalCos) continue;
    if (-chord.dot(a.outward) < kAntipodalCos) continue;

    const Vec2 mid = 0.5 * (a.p + b.p);
    const Vec3 jaw = front.rotate(Vec3(chord.x(), chord.y(), 0.0));
    const Point3 grasp_at =
        front.apply(Vec3(mid.x(), mid.y(), 0.0)) + kFaceSink * approach;
    const Pose pose = Pose::from_z_axis(approach, jaw, grasp_at);
    if (field.hard.clearance(pose, tool) < 0.0) continue;

    GraspCandidate cand;
    cand.strategy = StrategyKind::Antipodal2D;
    cand.tool = ToolKind::Gripper;
    cand.context = GraspContext::Shelved;
    cand.grasp_pose = pose;
    cand.contacts = {
        {front.apply(Vec3(a.p.x(), a.p.y(), 0.0)),
         front.rotate(Vec3(a.outward.x(), a.outward.y(), 0.0))},
        {front.apply(Vec3(b.p.x(), b.p.y(), 0.0)),
         front.rotate(Vec3(b.outward.x(), b.outward.y(), 0.0))},
    };
    cand.gap = gap;
    cand.clearance = field.all.clearance(pose, tool);
    cand.score = cand.clearance;
    out.push_back(std::move(cand));
  }
  if (out.empty()) throw NoCandidates("antipodal_2d: no pair within stroke and angle limits");
  std::stable_sort(out.begin(), out.end(),
                   [](const GraspCandidate& l, const GraspCandidate& r) {
                     return l.score > r.score;
                   });
  return out;
}

}  // namespace graspkit::grasp
