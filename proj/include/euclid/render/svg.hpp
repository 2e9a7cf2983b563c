#pragma once

// Deterministic SVG output of figures and constructions.
//
// Coordinates are printed with six decimals after a uniform fit of the scene
// into the viewport (5% margin) with the y axis pointing up. The output uses
// only line, circle, path and text elements and is a pure function of the
// scene and options.

#include <string>
#include <utility>
#include <vector>

#include "euclid/elements/trace.hpp"

namespace euclid::render {

using elements::Object;
using geom::Point;

/// Styling class of an item. Auxiliary items are the circles and produced
/// lines of the construction; they are drawn thin and dashed.
enum class Role { Given, Auxiliary, Construction, Result };

const char* to_string(Role r);

struct Item {
  std::string name;
  Object object;
  Role role = Role::Construction;
};

struct Scene {
  std::vector<Item> items;
  /// Labeled points; a repeated name keeps its last position.
  std::vector<std::pair<std::string, Point>> labels;
};

struct Options {
  int width = 640;
  int height = 480;
  bool labels = true;
  std::string title;  // <title> when non-empty
};

/// Givens, the top-level trace objects, the outputs and lettered points of r.
Scene scene_of(const elements::PropositionResult& r);

/// Throws NothingToRender for a scene with no items and no labels.
std::string render(const Scene& s, const Options& o = {});

}  // namespace euclid::render
