/*
 * Copyright 2026 The Percept Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PERCEPT_FORGE_STARSTRUCK_HPP_
#define PERCEPT_FORGE_STARSTRUCK_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "percept/forge/extrude.hpp"

namespace percept {

inline constexpr double kPlatformSideMm = 100.0;
inline constexpr double kShapeHeightMm = 4.0;
inline constexpr double kStarOuterRadiusMm = 15.0;
inline constexpr double kStarInnerRadiusMm = 6.0;
inline constexpr double kCircleRadiusMm = 12.0;
inline constexpr int kCircleSegments = 24;
inline constexpr double kSquareSideMm = 20.0;
inline constexpr int kStarstruckCorpusSize = 3300;
inline constexpr int kStarstruckTestSize = 300;

enum class ShapeKind { kStar, kCircle, kSquare };

/// One placed item: shape and planar pose, millimetres and radians,
/// platform-centered coordinates.
struct SceneItem {
  ShapeKind shape = ShapeKind::kStar;
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
};

struct SceneLayout {
  std::vector<SceneItem> items;  // stars first, then distractors
  int star_count = 0;
};

/// Origin-centered outline of a shape, counter-clockwise.
Polygon2 shape_outline(ShapeKind shape);

/// Convex decomposition of the outline for pairwise overlap tests; the star
/// splits into its fan triangles, circle and square are already convex.
std::vector<Polygon2> shape_convex_parts(ShapeKind shape);

/// Radius of the smallest origin-centered circle containing the outline.
double shape_circumradius(ShapeKind shape);

Polygon2 transformed_outline(const SceneItem& item);

/// Separating-axis test; shared boundaries count as disjoint.
bool convex_polygons_overlap(const Polygon2& a, const Polygon2& b);

bool items_overlap(const SceneItem& a, const SceneItem& b);

const char* shape_name(ShapeKind shape);
ShapeKind shape_from_name(const std::string& name);

/// Draws a layout: 1-3 stars (seed-balanced so every corpus third is one
/// class), 0-5 circle/square distractors, poses sampled sequentially with
/// full platform containment and no overlaps. A shape failing to place after
/// 100 attempts discards all placements and restarts. Deterministic in seed.
SceneLayout generate_starstruck_scene(std::uint64_t seed);

/// One line per item: "<shape> <x> <y> <theta>".
std::string to_manifest(const SceneLayout& layout);
SceneLayout from_manifest(const std::string& text);

}  // namespace percept

#endif  // PERCEPT_FORGE_STARSTRUCK_HPP_
