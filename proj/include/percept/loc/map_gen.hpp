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

#ifndef PERCEPT_LOC_MAP_GEN_HPP_
#define PERCEPT_LOC_MAP_GEN_HPP_

#include <cstdint>

#include "percept/loc/grid_map.hpp"

namespace percept {

inline constexpr int kMazeSize = 21;
inline constexpr int kRoomsSize = 32;
inline constexpr int kRoomsMinSize = 5;

/// Perfect maze on a 21x21 grid: rooms at odd coordinates, walls carved by a
/// depth-first backtracker so the free cells form a tree.
GridMap generate_maze(std::uint64_t seed);

/// Room-and-door layout on a 32x32 grid: the interior is recursively split by
/// one-cell walls (rooms never smaller than 5x5), each wall pierced by a one-
/// or two-cell door. Rebuilt until the free space is connected.
GridMap generate_rooms(std::uint64_t seed);

}  // namespace percept

#endif  // PERCEPT_LOC_MAP_GEN_HPP_
