// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#pragma once

#include <string>

#include "graspkit/scene/types.hpp"

namespace graspkit::scene {

// Scene file schema: top-level {version: 1, seed, fixtures[], items[]};
// poses stored as translation xyz plus unit quaternion wxyz.
std::string scene_to_json(const Scene& scene);
Scene scene_from_json(const std::string& text);

void save_scene(const Scene& scene, const std::string& path);
Scene load_scene(const std::string& path);

}  // namespace graspkit::scene
