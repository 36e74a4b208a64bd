// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "graspkit/core.hpp"

namespace graspkit::geom {

enum class VoxelClass : std::uint8_t { Free = 0, Hard = 1, Soft = 2, Unknown = 3 };

inline bool is_occupied(VoxelClass c) {
  return c == VoxelClass::Hard || c == VoxelClass::Soft;
}

// Dense axis-aligned voxel grid. Cells outside the stored block are Free.
struct VoxelGrid {
  Vec3 origin = Vec3::Zero();  // world position of the (0,0,0) cell corner
  double resolution = 0.005;
  std::array<int, 3> dims = {0, 0, 0};
  std::vector<VoxelClass> cells;

  VoxelGrid() = default;
  VoxelGrid(const Vec3& origin_, double resolution_, std::array<int, 3> dims_)
      : origin(origin_), resolution(resolution_), dims(dims_) {
    if (resolution <= 0.0) throw ConfigError("VoxelGrid: resolution must be positive");
    if (dims[0] < 0 || dims[1] < 0 || dims[2] < 0) {
      throw ConfigError("VoxelGrid: negative dimension");
    }
    cells.assign(std::size_t(dims[0]) * dims[1] * dims[2], VoxelClass::Free);
  }

  std::size_t cell_count() const { return cells.size(); }

  bool in_bounds(int ix, int iy, int iz) const {
    return ix >= 0 && iy >= 0 && iz >= 0 && ix < dims[0] && iy < dims[1] && iz < dims[2];
  }

  std::size_t flat(int ix, int iy, int iz) const {
    return (std::size_t(iz) * dims[1] + iy) * dims[0] + ix;
  }

  VoxelClass at(int ix, int iy, int iz) const {
    if (!in_bounds(ix, iy, iz)) return VoxelClass::Free;
    return cells[flat(ix, iy, iz)];
  }

  void set(int ix, int iy, int iz, VoxelClass c) {
    if (in_bounds(ix, iy, iz)) cells[flat(ix, iy, iz)] = c;
  }

  std::array<int, 3> world_to_index(const Vec3& p) const {
    return {int(std::floor((p.x() - origin.x()) / resolution)),
            int(std::floor((p.y() - origin.y()) / resolution)),
            int(std::floor((p.z() - origin.z()) / resolution))};
  }

  Vec3 index_to_center(int ix, int iy, int iz) const {
    return origin + resolution * Vec3(ix + 0.5, iy + 0.5, iz + 0.5);
  }

  VoxelClass class_at(const Vec3& p) const {
    const auto [ix, iy, iz] = world_to_index(p);
    return at(ix, iy, iz);
  }

  void set_at(const Vec3& p, VoxelClass c) {
    const auto [ix, iy, iz] = world_to_index(p);
    set(ix, iy, iz, c);
  }

  // Centers of all cells matching a predicate.
  template <class Pred>
  std::vector<Vec3> centers_where(Pred&& pred) const {
    std::vector<Vec3> out;
    for (int iz = 0; iz < dims[2]; ++iz) {
      for (int iy = 0; iy < dims[1]; ++iy) {
        for (int ix = 0; ix < dims[0]; ++ix) {
          if (pred(cells[flat(ix, iy, iz)])) out.push_back(index_to_center(ix, iy, iz));
        }
      }
    }
    return out;
  }

  std::vector<Vec3> occupied_centers() const {
    return centers_where([](VoxelClass c) { return is_occupied(c); });
  }
};

}  // namespace graspkit::geom
