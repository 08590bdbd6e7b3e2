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

#ifndef PERCEPT_LOC_RAYCAST_HPP_
#define PERCEPT_LOC_RAYCAST_HPP_

#include <array>

#include "percept/loc/grid_map.hpp"

namespace percept {

/// Exact distance from `origin` along unit direction `dir` to the first
/// boundary of an obstacle cell, via incremental grid traversal. Throws
/// InvalidState if the origin lies inside an obstacle cell.
double raycast(const GridMap& map, std::array<double, 2> origin,
               std::array<double, 2> dir);

inline constexpr int kLidarBeamCount = 8;

/// Eight beams at 45-degree increments starting from +x, each distance
/// divided by max(width, height) and clipped to [0, 1].
std::array<float, kLidarBeamCount> lidar_scan(const GridMap& map,
                                              std::array<double, 2> origin);

}  // namespace percept

#endif  // PERCEPT_LOC_RAYCAST_HPP_
