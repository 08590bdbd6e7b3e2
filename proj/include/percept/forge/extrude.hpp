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

#ifndef PERCEPT_FORGE_EXTRUDE_HPP_
#define PERCEPT_FORGE_EXTRUDE_HPP_

#include <array>
#include <vector>

#include "percept/forge/mesh.hpp"

namespace percept {

using Point2 = std::array<double, 2>;
using Polygon2 = std::vector<Point2>;

/// Signed shoelace area; positive for counter-clockwise loops.
double polygon_area(const Polygon2& poly);

/// True iff no two non-adjacent edges intersect or touch.
bool is_simple_polygon(const Polygon2& poly);

/// Ear-clipping triangulation of a simple loop; returns index triples wound
/// counter-clockwise regardless of the input winding.
std::vector<std::array<int, 3>> triangulate_polygon(const Polygon2& poly);

/// Extrudes a simple loop along +z from 0 to height into a watertight prism.
/// Throws InvalidArgument on self-intersecting input.
TriangleMesh extrude_polygon(const Polygon2& poly, double height);

}  // namespace percept

#endif  // PERCEPT_FORGE_EXTRUDE_HPP_
