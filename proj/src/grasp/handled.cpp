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

// Alpha must undercut the handle opening's inscribed radius or the alpha
// shape never carves the ring; growth recovers sparse clouds.
constexpr double kHullAlpha = 0.012;
constexpr double kMinHoleArea = 2e-4;      // m^2; smaller rings won't pass a finger
constexpr double kFingerHalfWidth = 0.006;  // clearance needed inside the ring
constexpr double kInsertDepth = 0.02;       // finger insertion past the face
constexpr double kHintGap = 0.014;          // assumed handle bar thickness at a hint

Vec2 closest_on_ring(const geom::Polygon2D& ring, const Vec2& p) {
  Vec2 best = ring.vertices.front();
  double best_d2 = std::numeric_limits<double>::infinity();
  const std::size_t n = ring.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = ring.vertices[i];
    const Vec2& b = ring.vertices[(i + 1) % n];
    const Vec2 ab = b - a;
    const double len2 = ab.squaredNorm();
    const double t = len2 < 1e-18 ? 0.0 : std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
    const Vec2 q = a + t * ab;
    const double d2 = (q - p).squaredNorm();
    if (d2 < best_d2) {
      best_d2 = d2;
      best = q;
    }
  }
  return best;
}

GraspCandidate make_candidate(const Pose& pose, const Point3& inside, const Point3& outside,
                              double gap, double clearance) {
  GraspCandidate cand;
  cand.strategy = StrategyKind::HandledItem;
  cand.tool = ToolKind::Gripper;
  cand.context = GraspContext::Shelved;
  cand.grasp_pose = pose;
  const Vec3 jaw = pose.rotation.col(0);
  cand.contacts = {{inside, -jaw}, {outside, jaw}};
  cand.gap = gap;
  cand.clearance = clearance;
  cand.score = clearance;
  cand.fixed_orientation = true;
  return cand;
}

}  // namespace

GraspCandidate handled_grasp(const scene::Observation& obs, const ToolModel& tool,
                             const std::optional<Point3>& keypoint_hint) {
  if (tool.kind != ToolKind::Gripper) throw ConfigError("handled_grasp: needs a gripper");

  const Pose front = detail::front_frame(obs);
  const Vec3 approach = -front.rotation.col(2);
  const std::vector<Vec2> flat = geom::project_to_plane(obs.target_cloud, front);
  const geom::ConcaveHull hull = geom::concave_hull(flat, kHullAlpha);
  const detail::Field field(obs);

  // Hole path: one finger through the ring, the other outside the outer
  // boundary, jaws spanning the handle bar between them.
  const geom::Polygon2D* hole = nullptr;
  double hole_area = kMinHoleArea;
  for (const auto& h : hull.holes) {
    const double area = h.signed_area();
    if (area >= hole_area) {
      hole_area = area;
      hole = &h;
    }
  }
  if (hole != nullptr) {
    const Vec2 c1 = hole->centroid();
    if (geom::signed_distance(*hole, c1) >= kFingerHalfWidth) {
      const Vec2 c2 = closest_on_ring(hull.outer, c1);
      const double gap = (c2 - c1).norm();
      if (gap > 1e-4 && gap <= tool.stroke) {
        const Vec2 chord = (c2 - c1) / gap;
        const Vec3 jaw = front.rotate(Vec3(chord.x(), chord.y(), 0.0));
        const Vec2 mid = 0.5 * (c1 + c2);
        const Point3 at =
            front.apply(Vec3(mid.x(), mid.y(), 0.0)) + kInsertDepth * approach;
        const Pose pose = Pose::from_z_axis(approach, jaw, at);
        if (field.hard.clearance(pose, tool) >= 0.0) {
          return make_candidate(pose, front.apply(Vec3(c1.x(), c1.y(), 0.0)),
                                front.apply(Vec3(c2.x(), c2.y(), 0.0)), gap,
                                field.all.clearance(pose, tool));
        }
      }
    }
  }

  // Keypoint path: the handle curves outward or its opening is blocked, so
  // center the jaws on the hinted bar instead.
  if (keypoint_hint.has_value()) {
    const Vec3 jaw = front.rotation.col(0);
    const Point3 at = *keypoint_hint + kInsertDepth * approach;
    const Pose pose = Pose::from_z_axis(approach, jaw, at);
    if (field.hard.clearance(pose, tool) >= 0.0) {
      return make_candidate(pose, *keypoint_hint - 0.5 * kHintGap * jaw,
                            *keypoint_hint + 0.5 * kHintGap * jaw, kHintGap,
                            field.all.clearance(pose, tool));
    }
    throw NoCandidates("handled_grasp: hinted grasp collides");
  }
  if (hole != nullptr) throw NoCandidates("handled_grasp: hole grasp collides, no hint");
  throw HandleNotFound("handled_grasp: no hull hole and no keypoint hint");
}

}  // namespace graspkit::grasp
