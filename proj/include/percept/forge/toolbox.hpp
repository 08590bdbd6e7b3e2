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

#ifndef PERCEPT_FORGE_TOOLBOX_HPP_
#define PERCEPT_FORGE_TOOLBOX_HPP_

#include "percept/forge/extrude.hpp"
#include "percept/forge/mesh.hpp"

namespace percept {

inline constexpr int kToolboxVariantCount = 4;
inline constexpr double kToolHeightMm = 6.0;

/// Per-variant uniform scale of the base wrench.
double toolbox_variant_scale(int variant);

/// Open-end wrench silhouette: 70x12 mm rounded-rectangle handle merged with
/// a radius-14 mm C-shaped head, jaw opening 10 mm. Simple counter-clockwise
/// loop centered at the area centroid.
Polygon2 wrench_outline(double scale = 1.0);

/// Extruded wrench solid for one of the four size variants, resting on z=0,
/// rotation origin at the footprint centroid.
TriangleMesh toolbox_tool_mesh(int variant);

}  // namespace percept

#endif  // PERCEPT_FORGE_TOOLBOX_HPP_
