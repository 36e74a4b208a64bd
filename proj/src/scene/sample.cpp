// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include "graspkit/scene/sample.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>

#include "graspkit/scene/catalog.hpp"

namespace graspkit::scene {
namespace {

struct FaceBox {
  Vec3 center;
  Vec3 half;
};

void sample_box(const Vec3& center, const Vec3& half, int n, Rng& rng, PointCloud& out) {
  const double ax = half.y() * half.z();
  const double ay = half.x() * half.z();
  const double az = half.x() * half.y();
  const double total = 2.0 * (ax + ay + az);
  if (total <= 0.0 || n <= 0) return;
  for (int i = 0; i < n; ++i) {
    double pick = rng.uniform(0.0, total);
    int axis;
    if (pick < 2 * ax) {
      axis = 0;
    } else if (pick < 2 * ax + 2 * ay) {
      axis = 1;
      pick -= 2 * ax;
    } else {
      axis = 2;
      pick -= 2 * ax + 2 * ay;
    }
    const double side = (pick < (axis == 0 ? ax : axis == 1 ? ay : az)) ? 1.0 : -1.0;
    Vec3 p(rng.uniform(-half.x(), half.x()), rng.uniform(-half.y(), half.y()),
           rng.uniform(-half.z(), half.z()));
    Vec3 normal = Vec3::Zero();
    p[axis] = side * half[axis];
    normal[axis] = side;
    out.push(center + p, normal);
  }
}

void sample_cylinder(const ItemSpec& spec, int n, Rng& rng, PointCloud& out) {
  const double r = 0.5 * spec.dims.x();
  const double h = spec.dims.z();
  const double lateral = 2.0 * M_PI * r * h;
  const double cap = M_PI * r * r;
  const double total = lateral + 2.0 * cap;
  for (int i = 0; i < n; ++i) {
    const double pick = rng.uniform(0.0, total);
    if (pick < lateral) {
      const double th = rng.uniform(0.0, 2.0 * M_PI);
      const Vec3 normal(std::cos(th), std::sin(th), 0.0);
      out.push(Vec3(r * normal.x(), r * normal.y(), rng.uniform(-0.5 * h, 0.5 * h)), normal);
    } else {
      const double side = pick < lateral + cap ? 1.0 : -1.0;
      const double rr = r * std::sqrt(rng.uniform(0.0, 1.0));
      const double th = rng.uniform(0.0, 2.0 * M_PI);
      out.push(Vec3(rr * std::cos(th), rr * std::sin(th), side * 0.5 * h),
               Vec3(0.0, 0.0, side));
    }
  }
}

void sample_ellipsoid(const ItemSpec& spec, int n, Rng& rng, PointCloud& out) {
  const Vec3 semi = 0.5 * spec.dims;
  for (int i = 0; i < n; ++i) {
    const Vec3 u = rng.unit_vector();
    const Vec3 p = semi.cwiseProduct(u);
    out.push(p, u.cwiseQuotient(semi).normalized());
  }
}

void sample_handled_box(const ItemSpec& spec, int n, Rng& rng, PointCloud& out) {
  const HandleArch arch = handle_arch(spec);
  const Vec3 half = 0.5 * spec.dims;
  const double body_top = half.z() - arch.arch_height;
  const double bar_bottom = half.z() - arch.bar_thickness;

  std::vector<FaceBox> parts;
  // Body below the arch.
  parts.push_back({Vec3(0, 0, 0.5 * (body_top - half.z())),
                   Vec3(half.x(), half.y(), 0.5 * (body_top + half.z()))});
  // Two posts and the crossbar.
  const double post_half_h = 0.5 * (bar_bottom - body_top);
  for (const double sx : {-1.0, 1.0}) {
    parts.push_back({Vec3(sx * arch.half_span, 0, body_top + post_half_h),
                     Vec3(0.5 * arch.post_thickness, 0.5 * arch.depth, post_half_h)});
  }
  parts.push_back({Vec3(0, 0, 0.5 * (bar_bottom + half.z())),
                   Vec3(arch.half_span + 0.5 * arch.post_thickness, 0.5 * arch.depth,
                        0.5 * arch.bar_thickness)});

  std::vector<double> areas;
  double total = 0.0;
  for (const auto& part : parts) {
    const Vec3& h = part.half;
    const double a = 8.0 * (h.x() * h.y() + h.y() * h.z() + h.x() * h.z());
    areas.push_back(a);
    total += a;
  }
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const int nk = int(std::lround(double(n) * areas[k] / total));
    sample_box(parts[k].center, parts[k].half, nk, rng, out);
  }
}

void sample_hanging_card(const ItemSpec& spec, int n, Rng& rng, PointCloud& out) {
  const CardHole hole = card_hole(spec);
  const Vec3 half = 0.5 * spec.dims;
  PointCloud raw;
  sample_box(Vec3::Zero(), half, n, rng, raw);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const Vec3& p = raw.points[i];
    if (std::abs(std::abs(p.y()) - half.y()) < 1e-12) {
      const Vec2 on_face(p.x(), p.z());
      if ((on_face - hole.center_xz).norm() < hole.radius) continue;
    }
    out.push(p, raw.normals[i]);
  }
}

Obb local_box(const Fixture& f, const Vec3& center, const Vec3& half,
              const Mat3& rot = Mat3::Identity()) {
  Obb box;
  box.pose.rotation = f.pose.rotation * rot;
  box.pose.translation = f.pose.apply(center);
  box.half = half;
  return box;
}

}  // namespace

double item_surface_area(const ItemSpec& spec) {
  const Vec3& d = spec.dims;
  switch (spec.shape) {
    case ItemShape::Cylinder: {
      const double r = 0.5 * d.x();
      return 2.0 * M_PI * r * d.z() + 2.0 * M_PI * r * r;
    }
    case ItemShape::Ellipsoid: {
      // Thomsen's approximation.
      const double p = 1.6075;
      const Vec3 s = 0.5 * d;
      const double ap = std::pow(s.x(), p), bp = std::pow(s.y(), p), cp = std::pow(s.z(), p);
      return 4.0 * M_PI * std::pow((ap * bp + ap * cp + bp * cp) / 3.0, 1.0 / p);
    }
    default:
      return 2.0 * (d.x() * d.y() + d.y() * d.z() + d.x() * d.z());
  }
}

int surface_sample_count(const ItemSpec& spec, double points_per_m2, int min_points) {
  return std::max(min_points, int(item_surface_area(spec) * points_per_m2));
}

PointCloud sample_item_surface(const ItemSpec& spec, int n_points, Rng& rng) {
  PointCloud out;
  out.reserve(std::size_t(std::max(0, n_points)));
  switch (spec.shape) {
    case ItemShape::Box:
    case ItemShape::Bag:
      sample_box(Vec3::Zero(), 0.5 * spec.dims, n_points, rng, out);
      break;
    case ItemShape::Cylinder:
      sample_cylinder(spec, n_points, rng, out);
      break;
    case ItemShape::Ellipsoid:
      sample_ellipsoid(spec, n_points, rng, out);
      break;
    case ItemShape::HandledBox:
      sample_handled_box(spec, n_points, rng, out);
      break;
    case ItemShape::HangingCard:
      sample_hanging_card(spec, n_points, rng, out);
      break;
  }
  return out;
}

std::vector<Obb> fixture_solids(const Fixture& fixture) {
  std::vector<Obb> out;
  const double t = fixture.board_thickness;

  if (fixture.kind == FixtureKind::Shelf || fixture.kind == FixtureKind::Fridge) {
    const double w = fixture.width, d = fixture.depth;
    out.push_back(local_box(fixture, Vec3(0, 0, -0.5 * t), Vec3(0.5 * w, 0.5 * d, 0.5 * t)));
    if (fixture.lip_height > 0.0) {
      const double lip_t = 0.012;
      out.push_back(local_box(fixture, Vec3(0, -0.5 * d + 0.5 * lip_t, 0.5 * fixture.lip_height),
                              Vec3(0.5 * w, 0.5 * lip_t, 0.5 * fixture.lip_height)));
    }
    if (fixture.kind == FixtureKind::Fridge) {
      // Case back wall.
      out.push_back(local_box(fixture, Vec3(0, 0.5 * d + 0.009, 0.5 * fixture.opening_height),
                              Vec3(0.5 * w, 0.009, 0.5 * fixture.opening_height + t)));
    }
  } else if (fixture.kind == FixtureKind::Hook) {
    const Vec3 dir = (fixture.rod_b - fixture.rod_a).normalized();
    const double len = (fixture.rod_b - fixture.rod_a).norm();
    Mat3 rot;
    rot.col(0) = dir;
    Vec3 up = std::abs(dir.z()) < 0.9 ? Vec3::UnitZ() : Vec3::UnitX();
    rot.col(1) = up.cross(dir).normalized();
    rot.col(2) = dir.cross(rot.col(1));
    Obb rod;
    rod.pose.rotation = fixture.pose.rotation * rot;
    rod.pose.translation = fixture.pose.apply(0.5 * (fixture.rod_a + fixture.rod_b));
    rod.half = Vec3(0.5 * len, fixture.rod_radius, fixture.rod_radius);
    out.push_back(rod);
    // Backing wall behind the rod root.
    out.push_back(local_box(fixture, fixture.rod_a + Vec3(0, 0.009, 0),
                            Vec3(0.20, 0.009, 0.20)));
  } else if (fixture.kind == FixtureKind::Pile) {
    Vec2 lo = fixture.bin.vertices[0], hi = lo;
    for (const auto& v : fixture.bin.vertices) {
      lo = lo.cwiseMin(v);
      hi = hi.cwiseMax(v);
    }
    const Vec2 c = 0.5 * (lo + hi), e = 0.5 * (hi - lo);
    out.push_back(local_box(fixture, Vec3(c.x(), c.y(), -0.5 * t), Vec3(e.x(), e.y(), 0.5 * t)));
    const std::size_t n = fixture.bin.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2 a = fixture.bin.vertices[i];
      const Vec2 b = fixture.bin.vertices[(i + 1) % n];
      const Vec2 edge = b - a;
      const double len = edge.norm();
      if (len < 1e-9) continue;
      const Vec2 dir = edge / len;
      const Vec2 outward(dir.y(), -dir.x());  // footprint is CCW
      const Vec2 mid = 0.5 * (a + b) + 0.5 * fixture.bin_wall_thickness * outward;
      Mat3 rot;
      rot.col(0) = Vec3(dir.x(), dir.y(), 0);
      rot.col(1) = Vec3(outward.x(), outward.y(), 0);
      rot.col(2) = Vec3::UnitZ();
      Obb wall;
      wall.pose.rotation = fixture.pose.rotation * rot;
      wall.pose.translation =
          fixture.pose.apply(Vec3(mid.x(), mid.y(), 0.5 * fixture.bin_wall_height));
      wall.half = Vec3(0.5 * len + fixture.bin_wall_thickness, 0.5 * fixture.bin_wall_thickness,
                       0.5 * fixture.bin_wall_height);
      out.push_back(wall);
    }
  }
  return out;
}

Obb door_solid(const Fixture& fixture, double angle) {
  if (fixture.kind != FixtureKind::Fridge) {
    throw ConfigError("door_solid: fixture has no door");
  }
  const double kDoorHeight = 1.20;
  const double kDoorHalfThickness = 0.010;
  // Closed door runs along +x from the hinge across the case front; positive
  // angle swings the free edge outward (toward -y, into the aisle).
  const Mat3 swing = Eigen::AngleAxisd(-angle, fixture.hinge_axis.normalized()).toRotationMatrix();
  Obb door;
  door.pose.rotation = fixture.pose.rotation * swing;
  door.pose.translation = fixture.pose.apply(
      fixture.hinge_point +
      swing * Vec3(0.5 * fixture.door_width, -kDoorHalfThickness, 0.5 * kDoorHeight));
  door.half = Vec3(0.5 * fixture.door_width, kDoorHalfThickness, 0.5 * kDoorHeight);
  return door;
}

}  // namespace graspkit::scene
