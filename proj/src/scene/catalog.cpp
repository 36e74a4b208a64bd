// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include "graspkit/scene/catalog.hpp"

namespace graspkit::scene {
namespace {

ItemSpec make(const char* id, Vec3 dims, double mass, ItemShape shape, double porosity = 0.0) {
  ItemSpec s;
  s.id = id;
  s.dims = dims;
  s.mass = mass;
  s.shape = shape;
  s.porosity = porosity;
  s.is_bag = shape == ItemShape::Bag;
  s.has_handle = shape == ItemShape::HandledBox;
  return s;
}

std::vector<ItemSpec> build_catalog() {
  std::vector<ItemSpec> out;

  out.push_back(make("812-CEREAL", {0.19, 0.06, 0.26}, 0.45, ItemShape::Box, 0.05));
  // Porous paper sleeve: no suction seal, so this one exercises jaw grasps.
  // Narrow face out so the jaws can straddle it from the aisle.
  out.push_back(make("447-CRACKER", {0.06, 0.14, 0.20}, 0.30, ItemShape::Box, 0.40));
  out.push_back(make("664-JUICE", {0.09, 0.09, 0.23}, 1.95, ItemShape::Box));
  out.push_back(make("231-SOUP", {0.066, 0.066, 0.10}, 0.35, ItemShape::Cylinder));
  out.push_back(make("530-TUNA", {0.10, 0.10, 0.045}, 0.20, ItemShape::Cylinder));
  out.push_back(make("776-YOGURT", {0.095, 0.095, 0.055}, 0.15, ItemShape::Cylinder));
  out.push_back(make("615-CHIPS", {0.22, 0.07, 0.28}, 0.15, ItemShape::Bag, 0.85));
  out.push_back(make("118-MILK", {0.10, 0.10, 0.24}, 1.90, ItemShape::HandledBox));
  out.push_back(make("902-DETERGENT", {0.18, 0.10, 0.28}, 3.50, ItemShape::HandledBox));
  out.push_back(make("554-SPICECARD", {0.09, 0.015, 0.14}, 0.06, ItemShape::HangingCard));
  out.push_back(make("289-ORANGE", {0.075, 0.075, 0.070}, 0.20, ItemShape::Ellipsoid, 0.5));
  out.push_back(make("290-MELON", {0.14, 0.14, 0.13}, 1.80, ItemShape::Ellipsoid, 0.1));

  ItemSpec pickles = make("333-PICKLES", {0.085, 0.085, 0.15}, 0.90, ItemShape::Cylinder);
  pickles.is_glass = true;
  out.push_back(pickles);

  out.push_back(make("007-WATER12", {0.33, 0.20, 0.25}, 9.00, ItemShape::Box));

  for (const auto& s : out) s.validate();
  return out;
}

}  // namespace

const std::vector<ItemSpec>& item_catalog() {
  static const std::vector<ItemSpec> catalog = build_catalog();
  return catalog;
}

const ItemSpec& find_spec(const std::string& id) {
  for (const auto& s : item_catalog()) {
    if (s.id == id) return s;
  }
  throw ConfigError("unknown item spec: " + id);
}

HandleArch handle_arch(const ItemSpec& spec) {
  HandleArch arch;
  arch.half_span = std::min(0.035, 0.35 * spec.dims.x());
  arch.depth = std::min(0.022, 0.5 * spec.dims.y());
  return arch;
}

Point3 handle_keypoint(const ItemSpec& spec) {
  if (!spec.has_handle) throw ConfigError("handle_keypoint: " + spec.id + " has no handle");
  const HandleArch arch = handle_arch(spec);
  return {0.0, 0.0, 0.5 * spec.dims.z() - 0.5 * arch.bar_thickness};
}

CardHole card_hole(const ItemSpec& spec) {
  CardHole hole;
  hole.center_xz = {0.0, 0.5 * spec.dims.z() - 0.02};
  return hole;
}

}  // namespace graspkit::scene
