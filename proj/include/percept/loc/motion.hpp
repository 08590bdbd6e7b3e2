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

#ifndef PERCEPT_LOC_MOTION_HPP_
#define PERCEPT_LOC_MOTION_HPP_

#include <array>

#include "percept/loc/grid_map.hpp"

namespace percept {

/// Point motion with wall sliding: the x component is applied first, then the
/// y component, each truncated just short (1e-6) of the first boundary of a
/// blocking cell. `delta` must have norm <= 1 so at most one boundary can be
/// crossed per axis. Returns the realized position.
std::array<double, 2> move_with_collision(const GridMap& map,
                                          std::array<double, 2> pos,
                                          std::array<double, 2> delta);

}  // namespace percept

#endif  // PERCEPT_LOC_MOTION_HPP_
