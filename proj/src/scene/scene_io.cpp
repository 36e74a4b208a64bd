// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#include "graspkit/scene/scene_io.hpp"

#include <Eigen/Geometry>
#include <fstream>

#include "graspkit/scene/generate.hpp"
#include "json.hpp"

namespace graspkit::scene {
namespace {

using nlohmann::json;

json pose_to_json(const Pose& pose) {
  Eigen::Quaterniond q(pose.rotation);
  q.normalize();
  if (q.w() < 0.0 ||
      (q.w() == 0.0 && (q.x() < 0.0 || (q.x() == 0.0 && (q.y() < 0.0 ||
       (q.y() == 0.0 && q.z() < 0.0)))))) {
    q.coeffs() = -q.coeffs();
  }
  return json{{"translation", {pose.translation.x(), pose.translation.y(), pose.translation.z()}},
              {"quaternion", {q.w(), q.x(), q.y(), q.z()}}};
}

Pose pose_from_json(const json& j) {
  const auto& t = j.at("translation");
  const auto& q = j.at("quaternion");
  Eigen::Quaterniond quat(q.at(0).get<double>(), q.at(1).get<double>(), q.at(2).get<double>(),
                          q.at(3).get<double>());
  if (std::abs(quat.norm() - 1.0) > 1e-6) {
    throw ConfigError("scene file: non-unit quaternion");
  }
  quat.normalize();
  Pose pose;
  pose.rotation = quat.toRotationMatrix();
  pose.translation = Vec3(t.at(0).get<double>(), t.at(1).get<double>(), t.at(2).get<double>());
  return pose;
}

json vec3_to_json(const Vec3& v) { return json{v.x(), v.y(), v.z()}; }

Vec3 vec3_from_json(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()};
}

const char* shape_name(ItemShape s) {
  switch (s) {
    case ItemShape::Box: return "Box";
    case ItemShape::Cylinder: return "Cylinder";
    case ItemShape::Ellipsoid: return "Ellipsoid";
    case ItemShape::Bag: return "Bag";
    case ItemShape::HandledBox: return "HandledBox";
    case ItemShape::HangingCard: return "HangingCard";
  }
  return "Box";
}

ItemShape shape_from_name(const std::string& s) {
  if (s == "Box") return ItemShape::Box;
  if (s == "Cylinder") return ItemShape::Cylinder;
  if (s == "Ellipsoid") return ItemShape::Ellipsoid;
  if (s == "Bag") return ItemShape::Bag;
  if (s == "HandledBox") return ItemShape::HandledBox;
  if (s == "HangingCard") return ItemShape::HangingCard;
  throw ConfigError("scene file: unknown shape " + s);
}

const char* fixture_kind_name(FixtureKind k) {
  switch (k) {
    case FixtureKind::Shelf: return "Shelf";
    case FixtureKind::Fridge: return "Fridge";
    case FixtureKind::Hook: return "Hook";
    case FixtureKind::Pile: return "Pile";
  }
  return "Shelf";
}

FixtureKind fixture_kind_from_name(const std::string& s) {
  if (s == "Shelf") return FixtureKind::Shelf;
  if (s == "Fridge") return FixtureKind::Fridge;
  if (s == "Hook") return FixtureKind::Hook;
  if (s == "Pile") return FixtureKind::Pile;
  throw ConfigError("scene file: unknown fixture kind " + s);
}

json spec_to_json(const ItemSpec& s) {
  return json{{"id", s.id},
              {"dims", vec3_to_json(s.dims)},
              {"mass", s.mass},
              {"shape", shape_name(s.shape)},
              {"is_bag", s.is_bag},
              {"has_handle", s.has_handle},
              {"is_articulated", s.is_articulated},
              {"is_glass", s.is_glass},
              {"porosity", s.porosity}};
}

ItemSpec spec_from_json(const json& j) {
  ItemSpec s;
  s.id = j.at("id").get<std::string>();
  s.dims = vec3_from_json(j.at("dims"));
  s.mass = j.at("mass").get<double>();
  s.shape = shape_from_name(j.at("shape").get<std::string>());
  s.is_bag = j.at("is_bag").get<bool>();
  s.has_handle = j.at("has_handle").get<bool>();
  s.is_articulated = j.at("is_articulated").get<bool>();
  s.is_glass = j.at("is_glass").get<bool>();
  s.porosity = j.at("porosity").get<double>();
  s.validate();
  return s;
}

json fixture_to_json(const Fixture& f) {
  json j{{"kind", fixture_kind_name(f.kind)}, {"pose", pose_to_json(f.pose)}};
  switch (f.kind) {
    case FixtureKind::Shelf:
      j["board"] = {{"width", f.width},
                    {"depth", f.depth},
                    {"thickness", f.board_thickness},
                    {"lip_height", f.lip_height},
                    {"opening_height", f.opening_height}};
      break;
    case FixtureKind::Fridge:
      j["board"] = {{"width", f.width},
                    {"depth", f.depth},
                    {"thickness", f.board_thickness},
                    {"lip_height", f.lip_height},
                    {"opening_height", f.opening_height}};
      j["door"] = {{"hinge_point", vec3_to_json(f.hinge_point)},
                   {"hinge_axis", vec3_to_json(f.hinge_axis)},
                   {"mass", f.door_mass},
                   {"closing_torque", f.closing_torque},
                   {"width", f.door_width}};
      break;
    case FixtureKind::Hook:
      j["rod"] = {{"a", vec3_to_json(f.rod_a)},
                  {"b", vec3_to_json(f.rod_b)},
                  {"radius", f.rod_radius}};
      break;
    case FixtureKind::Pile: {
      json ring = json::array();
      for (const auto& v : f.bin.vertices) ring.push_back(json{v.x(), v.y()});
      j["bin"] = {{"footprint", ring},
                  {"wall_height", f.bin_wall_height},
                  {"wall_thickness", f.bin_wall_thickness}};
      break;
    }
  }
  return j;
}

Fixture fixture_from_json(const json& j) {
  Fixture f;
  f.kind = fixture_kind_from_name(j.at("kind").get<std::string>());
  f.pose = pose_from_json(j.at("pose"));
  switch (f.kind) {
    case FixtureKind::Shelf:
    case FixtureKind::Fridge: {
      const auto& b = j.at("board");
      f.width = b.at("width").get<double>();
      f.depth = b.at("depth").get<double>();
      f.board_thickness = b.at("thickness").get<double>();
      f.lip_height = b.at("lip_height").get<double>();
      f.opening_height = b.at("opening_height").get<double>();
      if (f.kind == FixtureKind::Fridge) {
        const auto& d = j.at("door");
        f.hinge_point = vec3_from_json(d.at("hinge_point"));
        f.hinge_axis = vec3_from_json(d.at("hinge_axis"));
        f.door_mass = d.at("mass").get<double>();
        f.closing_torque = d.at("closing_torque").get<double>();
        f.door_width = d.at("width").get<double>();
      }
      break;
    }
    case FixtureKind::Hook: {
      const auto& r = j.at("rod");
      f.rod_a = vec3_from_json(r.at("a"));
      f.rod_b = vec3_from_json(r.at("b"));
      f.rod_radius = r.at("radius").get<double>();
      break;
    }
    case FixtureKind::Pile: {
      const auto& b = j.at("bin");
      for (const auto& v : b.at("footprint")) {
        f.bin.vertices.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
      }
      f.bin_wall_height = b.at("wall_height").get<double>();
      f.bin_wall_thickness = b.at("wall_thickness").get<double>();
      break;
    }
  }
  f.validate();
  return f;
}

}  // namespace

std::string scene_to_json(const Scene& scene) {
  json j;
  j["version"] = 1;
  j["seed"] = scene.seed;
  j["fixtures"] = json::array();
  for (const auto& f : scene.fixtures) j["fixtures"].push_back(fixture_to_json(f));
  j["items"] = json::array();
  for (const auto& item : scene.items) {
    j["items"].push_back(json{{"id", item.id},
                              {"spec", spec_to_json(item.spec)},
                              {"pose", pose_to_json(item.pose)},
                              {"fixture_index", item.fixture_index}});
  }
  return j.dump(2) + "\n";
}

Scene scene_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("scene file: ") + e.what());
  }
  try {
    if (j.at("version").get<int>() != 1) {
      throw ConfigError("scene file: unsupported version");
    }
    Scene scene;
    scene.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& fj : j.at("fixtures")) scene.fixtures.push_back(fixture_from_json(fj));
    for (const auto& ij : j.at("items")) {
      ItemInstance item;
      item.id = ij.at("id").get<std::string>();
      item.spec = spec_from_json(ij.at("spec"));
      item.pose = pose_from_json(ij.at("pose"));
      item.fixture_index = ij.at("fixture_index").get<int>();
      scene.items.push_back(item);
    }
    validate_scene(scene);
    return scene;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("scene file: ") + e.what());
  }
}

void save_scene(const Scene& scene, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path);
  out << scene_to_json(scene);
  if (!out) throw Error("write failed: " + path);
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return scene_from_json(text);
}

}  // namespace graspkit::scene
