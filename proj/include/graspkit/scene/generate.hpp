// License: Apache-2.0. See LICENSE file in root directory.
// Copyright 2026 The graspkit authors.

#pragma once

#include "graspkit/scene/types.hpp"

namespace graspkit::scene {

enum class SceneTemplate { ShelfAisle, FridgeCase, HookWall, ProducePile };

const char* to_string(SceneTemplate t);
SceneTemplate template_from_string(const std::string& name);

// Deterministic synthetic scene. `density` is items per meter of usable
// fixture run (board width, rod length, or half the bin perimeter). Throws
// PackingFailure when fewer than half the requested items fit.
Scene generate_scene(SceneTemplate tmpl, std::uint64_t seed, double density);

// Usable fixture run in meters for a template, for item-count expectations.
double template_extent(SceneTemplate tmpl);

// Verifies Scene invariants; throws on violation. Used by loaders and tests.
void validate_scene(const Scene& scene);

}  // namespace graspkit::scene
