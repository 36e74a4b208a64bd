// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "graspkit/core.hpp"
#include "graspkit/geom/polygon.hpp"
#include "graspkit/geom/voxel.hpp"

namespace graspkit::scene {

enum class ItemShape { Box, Cylinder, Ellipsoid, Bag, HandledBox, HangingCard };

struct ItemSpec {
  std::string id;  // UPC-like
  Vec3 dims = Vec3::Zero();  // bounding box, meters
  double mass = 0.0;         // kg
  ItemShape shape = ItemShape::Box;
  bool is_bag = false;
  bool has_handle = false;
  bool is_articulated = false;
  bool is_glass = false;
  double porosity = 0.0;  // surface porosity factor in [0, 1]

  void validate() const {
    if (id.empty()) throw ConfigError("ItemSpec: empty id");
    if (!(dims.minCoeff() > 0.0)) throw ConfigError("ItemSpec " + id + ": dims must be > 0");
    if (!(mass > 0.0)) throw ConfigError("ItemSpec " + id + ": mass must be > 0");
    if (porosity < 0.0 || porosity > 1.0) {
      throw ConfigError("ItemSpec " + id + ": porosity outside [0,1]");
    }
  }
};

enum class FixtureKind { Shelf, Fridge, Hook, Pile };

// Fixture frame: x along the board width, y into the fixture (the aisle and
// the robot are at negative y), z up. For boards the origin sits at the
// center of the top surface; the slab extends board_thickness below it.
struct Fixture {
  FixtureKind kind = FixtureKind::Shelf;
  Pose pose;

  // Shelf / Fridge board
  double width = 1.2;
  double depth = 0.45;
  double board_thickness = 0.018;
  double lip_height = 0.0;       // raised front edge above the board
  double opening_height = 0.38;  // clearance between board and structure above

  // Fridge door, in fixture frame
  Vec3 hinge_point = Vec3::Zero();
  Vec3 hinge_axis = Vec3::UnitZ();
  double door_mass = 0.0;
  double closing_torque = 0.0;
  double door_width = 0.0;

  // Hook rod segment, in fixture frame
  Vec3 rod_a = Vec3::Zero();
  Vec3 rod_b = Vec3::Zero();
  double rod_radius = 0.004;

  // Pile bin: footprint polygon on the fixture z=0 plane
  geom::Polygon2D bin;
  double bin_wall_height = 0.12;
  double bin_wall_thickness = 0.015;

  void validate() const {
    if (kind == FixtureKind::Shelf || kind == FixtureKind::Fridge) {
      if (!(opening_height > 0.0)) throw ConfigError("Fixture: opening_height must be > 0");
      if (lip_height < 0.0) throw ConfigError("Fixture: negative lip_height");
    }
    if (kind == FixtureKind::Fridge && !(closing_torque > 0.0)) {
      throw ConfigError("Fixture: fridge closing_torque must be > 0");
    }
    if (kind == FixtureKind::Hook && (rod_b - rod_a).norm() < 1e-9) {
      throw ConfigError("Fixture: degenerate hook rod");
    }
    if (kind == FixtureKind::Pile && bin.vertices.size() < 3) {
      throw ConfigError("Fixture: pile bin needs a polygon footprint");
    }
  }
};

struct ItemInstance {
  std::string id;  // unique within the scene
  ItemSpec spec;
  Pose pose;  // item frame centered in the bounding box
  int fixture_index = -1;

  Obb bbox() const { return Obb::from_dims(pose, spec.dims); }
};

struct Scene {
  std::vector<Fixture> fixtures;
  std::vector<ItemInstance> items;
  std::uint64_t seed = 0;

  const ItemInstance* find_item(const std::string& id) const {
    for (const auto& it : items) {
      if (it.id == id) return &it;
    }
    return nullptr;
  }
};

struct NoiseParams {
  double depth_sigma = 0.0;     // meters, along the viewing ray
  double seg_dropout = 0.0;     // probability per point
  double voxel_dropout = 0.0;   // probability per occupied voxel
  double detection_miss = 0.0;  // probability per observation
  double arrival_sigma = 0.0;   // meters, base placement error (truncated 0.40 m)

  void validate() const {
    auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!prob(seg_dropout) || !prob(voxel_dropout) || !prob(detection_miss)) {
      throw ConfigError("NoiseParams: probabilities must lie in [0,1]");
    }
    if (depth_sigma < 0.0 || arrival_sigma < 0.0) {
      throw ConfigError("NoiseParams: sigmas must be >= 0");
    }
  }
};

inline constexpr double kArrivalBound = 0.40;  // meters

struct Observation {
  PointCloud target_cloud;  // segmented, partial, world frame
  Obb target_bbox;
  geom::VoxelGrid voxels;  // Hard fixtures, Soft items (target included)
  Pose camera_pose;        // camera z looks along the viewing direction
  std::map<std::string, PointCloud> neighbor_clouds;
  std::string target_id;
};

}  // namespace graspkit::scene
