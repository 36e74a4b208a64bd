// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include "graspkit/scene/observe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "graspkit/scene/sample.hpp"

namespace graspkit::scene {
namespace {

using geom::VoxelClass;
using geom::VoxelGrid;

constexpr double kPointsPerM2 = 20000.0;

// Fork tags. Independent streams keep noise channels testable in isolation.
constexpr uint64_t kForkDetect = 1;
constexpr uint64_t kForkDepth = 2;
constexpr uint64_t kForkSegDrop = 3;
constexpr uint64_t kForkVoxelDrop = 4;
constexpr uint64_t kForkItemBase = 100;

void grow_bounds(const Obb& obb, Vec3& lo, Vec3& hi) {
  Vec3 blo, bhi;
  obb.bounds(blo, bhi);
  lo = lo.cwiseMin(blo);
  hi = hi.cwiseMax(bhi);
}

void rasterize_solid(VoxelGrid& grid, const Obb& obb, VoxelClass cls, bool only_free) {
  Vec3 lo, hi;
  obb.bounds(lo, hi);
  auto i0 = grid.world_to_index(lo);
  auto i1 = grid.world_to_index(hi);
  for (int k = 0; k < 3; ++k) {
    i0[k] = std::max(i0[k], 0);
    i1[k] = std::min(i1[k], grid.dims[k] - 1);
  }
  for (int iz = i0[2]; iz <= i1[2]; ++iz) {
    for (int iy = i0[1]; iy <= i1[1]; ++iy) {
      for (int ix = i0[0]; ix <= i1[0]; ++ix) {
        if (only_free && grid.at(ix, iy, iz) != VoxelClass::Free) continue;
        if (obb.contains(grid.index_to_center(ix, iy, iz))) grid.set(ix, iy, iz, cls);
      }
    }
  }
}

// True iff some occupied voxel lies strictly between the camera and the
// point's own voxel along the viewing ray. Amanatides-Woo traversal, clipped
// to the grid so the camera may sit outside it.
bool segment_blocked(const VoxelGrid& grid, const Vec3& cam, const Vec3& p) {
  const Vec3 diff = p - cam;
  const double dist = diff.norm();
  if (dist < 1e-12 || grid.cell_count() == 0) return false;
  const Vec3 dir = diff / dist;

  const Vec3 glo = grid.origin;
  const Vec3 ghi = grid.origin + grid.resolution * Vec3(grid.dims[0], grid.dims[1], grid.dims[2]);
  double t_enter = 0.0, t_exit = dist;
  for (int k = 0; k < 3; ++k) {
    if (std::abs(dir[k]) < 1e-15) {
      if (cam[k] < glo[k] || cam[k] > ghi[k]) return false;
      continue;
    }
    double t0 = (glo[k] - cam[k]) / dir[k];
    double t1 = (ghi[k] - cam[k]) / dir[k];
    if (t0 > t1) std::swap(t0, t1);
    t_enter = std::max(t_enter, t0);
    t_exit = std::min(t_exit, t1);
  }
  if (t_enter >= t_exit) return false;

  const auto dest = grid.world_to_index(p);
  Vec3 start = cam + (t_enter + 1e-9) * dir;
  auto idx = grid.world_to_index(start);

  std::array<int, 3> step{};
  Vec3 t_max, t_delta;
  for (int k = 0; k < 3; ++k) {
    if (dir[k] > 1e-15) {
      step[k] = 1;
      t_max[k] = ((grid.origin[k] + (idx[k] + 1) * grid.resolution) - cam[k]) / dir[k];
      t_delta[k] = grid.resolution / dir[k];
    } else if (dir[k] < -1e-15) {
      step[k] = -1;
      t_max[k] = ((grid.origin[k] + idx[k] * grid.resolution) - cam[k]) / dir[k];
      t_delta[k] = -grid.resolution / dir[k];
    } else {
      step[k] = 0;
      t_max[k] = std::numeric_limits<double>::infinity();
      t_delta[k] = std::numeric_limits<double>::infinity();
    }
  }

  const long max_steps = long(grid.dims[0]) + grid.dims[1] + grid.dims[2] + 3;
  for (long n = 0; n < max_steps; ++n) {
    if (idx == dest) return false;  // reached the point's voxel: not blocked
    if (geom::is_occupied(grid.at(idx[0], idx[1], idx[2]))) return true;
    int axis = 0;
    if (t_max[1] < t_max[axis]) axis = 1;
    if (t_max[2] < t_max[axis]) axis = 2;
    if (t_max[axis] >= dist) return false;  // stepped past the point
    idx[axis] += step[axis];
    t_max[axis] += t_delta[axis];
    if (!grid.in_bounds(idx[0], idx[1], idx[2])) return false;
  }
  return false;
}

}  // namespace

std::optional<Observation> observe(const Scene& scene, const Pose& camera_pose,
                                   const std::string& target_id, const NoiseParams& noise,
                                   std::uint64_t seed, double resolution) {
  noise.validate();
  if (resolution <= 0.0) throw ConfigError("observe: resolution must be positive");
  if (!camera_pose.is_valid()) throw ConfigError("observe: camera pose is not rigid");
  const ItemInstance* target = scene.find_item(target_id);
  if (target == nullptr) throw ConfigError("observe: no item named " + target_id);

  Rng root(seed);
  if (root.fork(kForkDetect).bernoulli(noise.detection_miss)) return std::nullopt;

  // World-frame surface samples for every item. Per-item fork keeps each cloud
  // stable no matter what else the scene contains.
  std::vector<PointCloud> clouds(scene.items.size());
  for (std::size_t i = 0; i < scene.items.size(); ++i) {
    Rng item_rng = root.fork(kForkItemBase + i);
    const int n = surface_sample_count(scene.items[i].spec, kPointsPerM2);
    clouds[i] = sample_item_surface(scene.items[i].spec, n, item_rng)
                    .transformed(scene.items[i].pose);
  }

  // Grid bounds over all geometry, padded so noisy points stay inside.
  Vec3 lo = Vec3::Constant(std::numeric_limits<double>::infinity());
  Vec3 hi = -lo;
  for (const auto& fixture : scene.fixtures) {
    for (const auto& solid : fixture_solids(fixture)) grow_bounds(solid, lo, hi);
  }
  for (const auto& item : scene.items) grow_bounds(item.bbox(), lo, hi);
  const double pad = 0.06 + 4.0 * noise.depth_sigma;
  lo -= Vec3::Constant(pad);
  hi += Vec3::Constant(pad);
  std::array<int, 3> dims;
  for (int k = 0; k < 3; ++k) dims[k] = std::max(1, int(std::ceil((hi[k] - lo[k]) / resolution)));
  VoxelGrid grid(lo, resolution, dims);

  // True occupancy: fixtures are Hard; item shells and box interiors Soft.
  // Interiors matter for occlusion, or sampled shells would leak rays.
  for (const auto& fixture : scene.fixtures) {
    for (const auto& solid : fixture_solids(fixture)) {
      rasterize_solid(grid, solid, VoxelClass::Hard, false);
    }
  }
  for (std::size_t i = 0; i < scene.items.size(); ++i) {
    rasterize_solid(grid, scene.items[i].bbox(), VoxelClass::Soft, true);
    for (const auto& p : clouds[i].points) {
      if (grid.class_at(p) == VoxelClass::Free) grid.set_at(p, VoxelClass::Soft);
    }
  }

  const Vec3 cam = camera_pose.translation;
  if (geom::is_occupied(grid.class_at(cam))) {
    throw InvalidCamera("observe: camera is inside scene geometry");
  }

  Observation obs;
  obs.camera_pose = camera_pose;
  obs.target_id = target_id;

  Rng depth_rng = root.fork(kForkDepth);
  Rng drop_rng = root.fork(kForkSegDrop);
  for (std::size_t i = 0; i < scene.items.size(); ++i) {
    PointCloud seen;
    for (std::size_t j = 0; j < clouds[i].points.size(); ++j) {
      const Vec3& p = clouds[i].points[j];
      if (segment_blocked(grid, cam, p)) continue;
      if (drop_rng.bernoulli(noise.seg_dropout)) continue;
      Vec3 q = p;
      if (noise.depth_sigma > 0.0) {
        const Vec3 ray = (p - cam).normalized();
        q += depth_rng.truncated_normal(noise.depth_sigma, 4.0 * noise.depth_sigma) * ray;
      }
      seen.push(q, clouds[i].normals[j]);
    }
    if (scene.items[i].id == target_id) {
      obs.target_cloud = std::move(seen);
    } else if (!seen.empty()) {
      obs.neighbor_clouds.emplace(scene.items[i].id, std::move(seen));
    }
  }
  if (obs.target_cloud.empty()) return std::nullopt;

  obs.target_bbox = target->bbox();
  obs.target_bbox.half += Vec3::Constant(4.0 * noise.depth_sigma);

  obs.voxels = std::move(grid);
  if (noise.voxel_dropout > 0.0) {
    Rng voxel_rng = root.fork(kForkVoxelDrop);
    for (auto& c : obs.voxels.cells) {
      if (geom::is_occupied(c) && voxel_rng.bernoulli(noise.voxel_dropout)) {
        c = VoxelClass::Free;
      }
    }
  }
  return obs;
}

geom::VoxelGrid classify_voxels(const Observation& obs, const std::string& target_id) {
  if (obs.target_id != target_id && obs.neighbor_clouds.count(target_id) == 0) {
    throw ConfigError("classify_voxels: observation does not cover " + target_id);
  }
  VoxelGrid out = obs.voxels;
  if (out.cell_count() == 0) return out;

  // Target occupancy to clear: its box (grown by half a voxel diagonal so
  // boundary voxels fall inside) plus the voxels its cloud points land in.
  Obb box = obs.target_bbox;
  const PointCloud* cloud = &obs.target_cloud;
  if (obs.target_id != target_id) cloud = &obs.neighbor_clouds.at(target_id);
  const double inflate = 0.5 * std::sqrt(3.0) * out.resolution;

  for (int iz = 0; iz < out.dims[2]; ++iz) {
    for (int iy = 0; iy < out.dims[1]; ++iy) {
      for (int ix = 0; ix < out.dims[0]; ++ix) {
        VoxelClass& c = out.cells[out.flat(ix, iy, iz)];
        if (c == VoxelClass::Unknown) {
          c = VoxelClass::Hard;  // unobserved space is not safe to sweep
          continue;
        }
        if (c == VoxelClass::Soft && obs.target_id == target_id &&
            box.contains(out.index_to_center(ix, iy, iz), inflate)) {
          c = VoxelClass::Free;
        }
      }
    }
  }
  for (const auto& p : cloud->points) {
    if (out.class_at(p) == VoxelClass::Soft) out.set_at(p, VoxelClass::Free);
  }
  return out;
}

}  // namespace graspkit::scene
