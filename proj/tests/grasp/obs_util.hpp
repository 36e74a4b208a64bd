// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#pragma once

#include <limits>
#include <vector>

#include "graspkit/geom/voxel.hpp"
#include "graspkit/scene/types.hpp"

namespace graspkit::test {

// Grid centered on the working volume used by these tests: a 0.7 m cube
// straddling the origin at 5 mm.
inline geom::VoxelGrid test_grid() {
  return geom::VoxelGrid(Vec3(-0.35, -0.35, -0.35), 0.005, {140, 140, 140});
}

// Mark every voxel whose center falls in [lo, hi].
inline void mark_box(geom::VoxelGrid& grid, const Vec3& lo, const Vec3& hi,
                     geom::VoxelClass cls) {
  for (int iz = 0; iz < grid.dims[2]; ++iz) {
    for (int iy = 0; iy < grid.dims[1]; ++iy) {
      for (int ix = 0; ix < grid.dims[0]; ++ix) {
        const Vec3 c = grid.index_to_center(ix, iy, iz);
        if ((c.array() >= lo.array()).all() && (c.array() <= hi.array()).all()) {
          grid.set(ix, iy, iz, cls);
        }
      }
    }
  }
}

// Observation with full control over cloud and obstacles. The bbox hugs the
// cloud; the grid defaults to empty.
inline scene::Observation make_obs(std::vector<Point3> points, const Pose& camera,
                                   geom::VoxelGrid grid = test_grid()) {
  scene::Observation obs;
  obs.target_cloud.points = std::move(points);
  obs.camera_pose = camera;
  obs.voxels = std::move(grid);
  obs.target_id = "TEST-ITEM";
  Vec3 lo = Vec3::Constant(std::numeric_limits<double>::infinity());
  Vec3 hi = -lo;
  for (const auto& p : obs.target_cloud.points) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  obs.target_bbox.pose.translation = 0.5 * (lo + hi);
  obs.target_bbox.half = 0.5 * (hi - lo);
  return obs;
}

inline Pose camera_at(const Point3& where, const Point3& look_at) {
  Vec3 dir = look_at - where;
  if (dir.norm() < 1e-12) dir = Vec3::UnitY();
  return Pose::from_z_axis(dir.normalized(), Vec3::UnitX(), where);
}

// Axis-aligned box surface grid as a head-on camera sees it: the full front
// (-y) face plus thin perspective slivers of the side and top faces. The
// slivers keep the cloud honestly three-dimensional without burying the
// dominant face.
inline std::vector<Point3> box_front_view(const Vec3& dims, const Point3& center,
                                          double step = 0.004) {
  const Vec3 h = 0.5 * dims;
  const double sliver = std::min(step, h.y());
  std::vector<Point3> pts;
  for (double x = -h.x(); x <= h.x() + 1e-9; x += step) {
    for (double z = -h.z(); z <= h.z() + 1e-9; z += step) {
      pts.push_back(center + Vec3(x, -h.y(), z));
    }
  }
  for (double y = -h.y(); y <= -h.y() + sliver + 1e-9; y += step) {
    for (double z = -h.z(); z <= h.z() + 1e-9; z += step) {
      pts.push_back(center + Vec3(-h.x(), y, z));
      pts.push_back(center + Vec3(h.x(), y, z));
    }
  }
  for (double x = -h.x(); x <= h.x() + 1e-9; x += step) {
    for (double y = -h.y(); y <= -h.y() + sliver + 1e-9; y += step) {
      pts.push_back(center + Vec3(x, y, h.z()));
    }
  }
  return pts;
}

}  // namespace graspkit::test
