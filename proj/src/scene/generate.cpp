// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include "graspkit/scene/generate.hpp"

#include <algorithm>
#include <cmath>

#include "graspkit/scene/catalog.hpp"

namespace graspkit::scene {
namespace {

struct WeightedSpec {
  const char* id;
  double weight;
};

const ItemSpec& draw_spec(const std::vector<WeightedSpec>& mix, Rng& rng) {
  double total = 0.0;
  for (const auto& w : mix) total += w.weight;
  double pick = rng.uniform(0.0, total);
  for (const auto& w : mix) {
    if (pick < w.weight) return find_spec(w.id);
    pick -= w.weight;
  }
  return find_spec(mix.back().id);
}

std::string instance_id(const ItemSpec& spec, int counter) {
  return spec.id + "#" + std::to_string(counter);
}

Fixture make_board(FixtureKind kind, double z, double width, double depth, double lip) {
  Fixture f;
  f.kind = kind;
  f.pose.translation = Vec3(0, 0, z);
  f.width = width;
  f.depth = depth;
  f.lip_height = lip;
  f.opening_height = 0.382;
  return f;
}

// Items placed left to right along one board with random gaps. Returns the
// number actually placed; stops early when the board runs out of width.
int fill_board(Scene& scene, int fixture_index, const std::vector<WeightedSpec>& mix,
               int requested, Rng& rng, int& counter) {
  const Fixture& board = scene.fixtures[std::size_t(fixture_index)];
  const double margin = 0.04;
  double cursor = -0.5 * board.width + margin;
  int placed = 0;
  for (int k = 0; k < requested; ++k) {
    const ItemSpec& spec = draw_spec(mix, rng);
    const double yaw = rng.uniform(-6.0 * kDeg, 6.0 * kDeg);
    const double eff_w =
        spec.dims.x() * std::abs(std::cos(yaw)) + spec.dims.y() * std::abs(std::sin(yaw));
    const double eff_d =
        spec.dims.x() * std::abs(std::sin(yaw)) + spec.dims.y() * std::abs(std::cos(yaw));
    const double gap = rng.uniform(0.012, 0.05);
    const double x = cursor + gap + 0.5 * eff_w;
    if (x + 0.5 * eff_w > 0.5 * board.width - margin) break;

    const double front_inset = (board.lip_height > 0.0 ? 0.014 : 0.0) +
                               rng.uniform(0.012, 0.06);
    const double y = -0.5 * board.depth + 0.5 * eff_d + front_inset;

    ItemInstance item;
    item.spec = spec;
    item.id = instance_id(spec, counter++);
    item.fixture_index = fixture_index;
    item.pose = board.pose.compose(Pose::from_axis_angle(Vec3::UnitZ(), yaw));
    item.pose.translation = board.pose.apply(Vec3(x, y, 0.5 * spec.dims.z()));
    scene.items.push_back(item);

    cursor = x + 0.5 * eff_w;
    ++placed;
  }
  return placed;
}

Scene make_shelf_aisle(std::uint64_t seed, double density) {
  Scene scene;
  scene.seed = seed;
  const double kBoardZ[4] = {0.30, 0.70, 1.10, 1.50};
  for (int b = 0; b < 4; ++b) {
    scene.fixtures.push_back(
        make_board(FixtureKind::Shelf, kBoardZ[b], 1.2, 0.45, b == 0 ? 0.045 : 0.0));
  }
  const std::vector<WeightedSpec> mix = {
      {"812-CEREAL", 0.22}, {"447-CRACKER", 0.16}, {"231-SOUP", 0.14}, {"615-CHIPS", 0.12},
      {"664-JUICE", 0.08},  {"118-MILK", 0.08},    {"776-YOGURT", 0.06}, {"530-TUNA", 0.05},
      {"902-DETERGENT", 0.04}, {"333-PICKLES", 0.03}, {"007-WATER12", 0.02}};

  Rng rng(seed);
  int counter = 0;
  int placed = 0, requested_total = 0;
  for (int b = 0; b < 3; ++b) {
    Rng board_rng = rng.fork(std::uint64_t(b));
    const int requested = int(std::lround(density * scene.fixtures[std::size_t(b)].width));
    requested_total += requested;
    placed += fill_board(scene, b, mix, requested, board_rng, counter);
  }
  if (placed * 2 < requested_total) {
    throw PackingFailure("shelf aisle: density infeasible for fixture extent");
  }
  return scene;
}

Scene make_fridge_case(std::uint64_t seed, double density) {
  Scene scene;
  scene.seed = seed;
  const double kBoardZ[3] = {0.50, 0.90, 1.30};
  for (int b = 0; b < 3; ++b) {
    Fixture f = make_board(FixtureKind::Fridge, kBoardZ[b], 0.60, 0.45, 0.02);
    f.door_mass = 4.0;
    f.closing_torque = 7.0;
    if (b == 0) {
      // The case door is attached to the bottom board's frame.
      f.hinge_point = Vec3(-0.30, -0.225, 0.0);
      f.hinge_axis = Vec3::UnitZ();
      f.door_width = 0.60;
    }
    scene.fixtures.push_back(f);
  }
  const std::vector<WeightedSpec> mix = {
      {"118-MILK", 0.40}, {"664-JUICE", 0.35}, {"776-YOGURT", 0.25}};

  Rng rng(seed);
  int counter = 0;
  int placed = 0, requested_total = 0;
  for (int b = 0; b < 2; ++b) {
    Rng board_rng = rng.fork(std::uint64_t(b));
    const int requested = int(std::lround(density * scene.fixtures[std::size_t(b)].width));
    requested_total += requested;
    placed += fill_board(scene, b, mix, requested, board_rng, counter);
  }
  if (placed * 2 < requested_total) {
    throw PackingFailure("fridge case: density infeasible for fixture extent");
  }
  return scene;
}

Scene make_hook_wall(std::uint64_t seed, double density) {
  Scene scene;
  scene.seed = seed;
  const double rod_len = 0.18;
  const double peg_x[3] = {-0.30, 0.0, 0.30};
  const double peg_z[2] = {1.00, 1.30};
  for (double z : peg_z) {
    for (double x : peg_x) {
      Fixture f;
      f.kind = FixtureKind::Hook;
      f.pose.translation = Vec3(x, 0.0, z);
      f.rod_a = Vec3::Zero();
      f.rod_b = Vec3(0, -rod_len, 0);
      scene.fixtures.push_back(f);
    }
  }

  Rng rng(seed);
  int counter = 0;
  int placed = 0, requested_total = 0;
  const ItemSpec& card = find_spec("554-SPICECARD");
  const CardHole hole = card_hole(card);
  for (std::size_t peg = 0; peg < scene.fixtures.size(); ++peg) {
    Rng peg_rng = rng.fork(peg);
    const int requested = std::min(3, int(std::lround(density * rod_len)));
    requested_total += requested;
    const Fixture& f = scene.fixtures[peg];
    for (int k = 0; k < requested; ++k) {
      ItemInstance item;
      item.spec = card;
      item.id = instance_id(card, counter++);
      item.fixture_index = int(peg);
      // Hole centered on the rod; cards stack from the tip toward the wall.
      const double y = -rod_len + 0.02 + double(k) * 0.035 + peg_rng.uniform(0.0, 0.006);
      item.pose.translation =
          f.pose.apply(Vec3(-hole.center_xz.x(), y, -hole.center_xz.y()));
      scene.items.push_back(item);
      ++placed;
    }
  }
  if (placed * 2 < requested_total) {
    throw PackingFailure("hook wall: density infeasible for fixture extent");
  }
  return scene;
}

Scene make_produce_pile(std::uint64_t seed, double density) {
  Scene scene;
  scene.seed = seed;
  Fixture f;
  f.kind = FixtureKind::Pile;
  f.pose.translation = Vec3(0, 0, 0.85);
  f.bin.vertices = {{-0.30, -0.25}, {0.30, -0.25}, {0.30, 0.25}, {-0.30, 0.25}};
  scene.fixtures.push_back(f);

  const std::vector<WeightedSpec> mix = {{"289-ORANGE", 0.75}, {"290-MELON", 0.25}};
  const double col_x[4] = {-0.225, -0.075, 0.075, 0.225};
  const double row_y[3] = {-0.17, 0.0, 0.17};

  Rng rng(seed);
  const double perimeter = 2.0 * (0.60 + 0.50);
  const int requested = int(std::lround(density * 0.5 * perimeter));
  double stack_top[12] = {};
  int placed = 0, counter = 0;
  for (int k = 0; k < requested; ++k) {
    const ItemSpec& spec = draw_spec(mix, rng);
    // Round-robin over columns; skip columns already stacked 3 high.
    int col = -1;
    for (int probe = 0; probe < 12; ++probe) {
      const int c = (k + probe) % 12;
      if (stack_top[c] < 2.5 * 0.075) {
        col = c;
        break;
      }
    }
    if (col < 0) break;
    ItemInstance item;
    item.spec = spec;
    item.id = instance_id(spec, counter++);
    item.fixture_index = 0;
    item.pose.translation = f.pose.apply(
        Vec3(col_x[col % 4], row_y[col / 4], stack_top[col] + 0.5 * spec.dims.z()));
    stack_top[col] += spec.dims.z();
    scene.items.push_back(item);
    ++placed;
  }
  if (placed * 2 < requested) {
    throw PackingFailure("produce pile: density infeasible for fixture extent");
  }
  return scene;
}

}  // namespace

const char* to_string(SceneTemplate t) {
  switch (t) {
    case SceneTemplate::ShelfAisle: return "ShelfAisle";
    case SceneTemplate::FridgeCase: return "FridgeCase";
    case SceneTemplate::HookWall: return "HookWall";
    case SceneTemplate::ProducePile: return "ProducePile";
  }
  return "ShelfAisle";
}

SceneTemplate template_from_string(const std::string& name) {
  if (name == "ShelfAisle" || name == "shelf") return SceneTemplate::ShelfAisle;
  if (name == "FridgeCase" || name == "fridge") return SceneTemplate::FridgeCase;
  if (name == "HookWall" || name == "hooks") return SceneTemplate::HookWall;
  if (name == "ProducePile" || name == "pile") return SceneTemplate::ProducePile;
  throw ConfigError("unknown scene template: " + name);
}

double template_extent(SceneTemplate tmpl) {
  switch (tmpl) {
    case SceneTemplate::ShelfAisle: return 3 * 1.2;
    case SceneTemplate::FridgeCase: return 2 * 0.6;
    case SceneTemplate::HookWall: return 6 * 0.18;
    case SceneTemplate::ProducePile: return 0.5 * 2.0 * (0.60 + 0.50);
  }
  return 0.0;
}

Scene generate_scene(SceneTemplate tmpl, std::uint64_t seed, double density) {
  if (!(density >= 0.0)) throw ConfigError("generate_scene: density must be >= 0");
  Scene scene;
  switch (tmpl) {
    case SceneTemplate::ShelfAisle: scene = make_shelf_aisle(seed, density); break;
    case SceneTemplate::FridgeCase: scene = make_fridge_case(seed, density); break;
    case SceneTemplate::HookWall: scene = make_hook_wall(seed, density); break;
    case SceneTemplate::ProducePile: scene = make_produce_pile(seed, density); break;
  }
  validate_scene(scene);
  return scene;
}

void validate_scene(const Scene& scene) {
  for (const auto& f : scene.fixtures) f.validate();

  for (const auto& item : scene.items) {
    item.spec.validate();
    if (item.fixture_index < 0 || item.fixture_index >= int(scene.fixtures.size())) {
      throw ConfigError("scene item " + item.id + ": bad fixture index");
    }
    if (!item.pose.is_valid()) {
      throw ConfigError("scene item " + item.id + ": invalid pose");
    }
    const Fixture& f = scene.fixtures[std::size_t(item.fixture_index)];
    const Vec3 local = f.pose.inverse_apply(item.pose.translation);
    const double bottom = local.z() - 0.5 * item.spec.dims.z();
    switch (f.kind) {
      case FixtureKind::Shelf:
      case FixtureKind::Fridge:
        if (std::abs(bottom) > 1e-3) {
          throw ConfigError("scene item " + item.id + ": not resting on its board");
        }
        break;
      case FixtureKind::Hook: {
        // The card's punched hole must sit on the rod line.
        const CardHole hole = card_hole(item.spec);
        const Vec3 hole_world =
            item.pose.apply(Vec3(hole.center_xz.x(), 0.0, hole.center_xz.y()));
        const Vec3 a = f.pose.apply(f.rod_a);
        const Vec3 b = f.pose.apply(f.rod_b);
        const Vec3 ab = b - a;
        const double t = std::clamp((hole_world - a).dot(ab) / ab.squaredNorm(), 0.0, 1.0);
        if ((a + t * ab - hole_world).norm() > f.rod_radius + 2e-3) {
          throw ConfigError("scene item " + item.id + ": hole off the rod line");
        }
        break;
      }
      case FixtureKind::Pile: {
        if (bottom < -1e-3) {
          throw ConfigError("scene item " + item.id + ": below the bin floor");
        }
        if (bottom > 1e-3) {
          // Stacked: must rest on another pile item directly below.
          bool supported = false;
          for (const auto& other : scene.items) {
            if (&other == &item || other.fixture_index != item.fixture_index) continue;
            const Vec3 lo = f.pose.inverse_apply(other.pose.translation);
            const double other_top = lo.z() + 0.5 * other.spec.dims.z();
            const bool xy_close = std::abs(lo.x() - local.x()) < 0.02 &&
                                  std::abs(lo.y() - local.y()) < 0.02;
            if (xy_close && std::abs(other_top - bottom) < 1e-3) {
              supported = true;
              break;
            }
          }
          if (!supported) {
            throw ConfigError("scene item " + item.id + ": floating in the pile");
          }
        }
        break;
      }
    }
  }

  for (std::size_t i = 0; i < scene.items.size(); ++i) {
    for (std::size_t j = i + 1; j < scene.items.size(); ++j) {
      if (obb_overlap(scene.items[i].bbox(), scene.items[j].bbox(), 1e-3)) {
        throw ConfigError("scene items " + scene.items[i].id + " and " + scene.items[j].id +
                          " interpenetrate");
      }
    }
  }
}

}  // namespace graspkit::scene
