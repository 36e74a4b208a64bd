// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#pragma once

#include <vector>

#include "graspkit/scene/types.hpp"

namespace graspkit::scene {

// Fixed grocery catalog used by the scene generators.
const std::vector<ItemSpec>& item_catalog();

// Spec lookup by id; throws ConfigError for unknown ids.
const ItemSpec& find_spec(const std::string& id);

// Handle arch geometry for HandledBox items, in the item frame. The arch sits
// on top of the body inside the declared bounding box: two posts and a
// crossbar, leaving a through hole for one finger.
struct HandleArch {
  double arch_height = 0.05;   // body top to bar top
  double half_span = 0.035;    // post center offset from item centerline
  double bar_thickness = 0.014;
  double post_thickness = 0.014;
  double depth = 0.022;        // arch extent along item y
};

HandleArch handle_arch(const ItemSpec& spec);

// Crossbar center in the item frame: the ground-truth keypoint a handle
// detector would report. Throws ConfigError for items without a handle.
Point3 handle_keypoint(const ItemSpec& spec);

// Punched hole for HangingCard items, in the item frame.
struct CardHole {
  Vec2 center_xz;  // on the card face
  double radius = 0.008;
};

CardHole card_hole(const ItemSpec& spec);

}  // namespace graspkit::scene
