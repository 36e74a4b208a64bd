// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#pragma once

#include "graspkit/scene/types.hpp"

namespace graspkit::scene {

// Surface samples of an item in its own frame, with outward normals.
// For HandledBox the arch posts and crossbar are included; for HangingCard
// the punched hole is left empty.
PointCloud sample_item_surface(const ItemSpec& spec, int n_points, Rng& rng);

// Point count proportional to surface area (>= min_points).
int surface_sample_count(const ItemSpec& spec, double points_per_m2, int min_points = 300);

// Solid boxes making up a fixture's physical geometry (boards, lips, walls,
// rods as thin boxes), in the world frame. Fridge doors are excluded; they
// move, so callers add door_solid() at the angle they care about.
std::vector<Obb> fixture_solids(const Fixture& fixture);

// Fridge door panel at the given opening angle (radians; 0 = closed, positive
// swings outward). World frame. Throws ConfigError for non-Fridge fixtures.
Obb door_solid(const Fixture& fixture, double angle);

// Approximate surface area of the item's visible shell.
double item_surface_area(const ItemSpec& spec);

}  // namespace graspkit::scene
