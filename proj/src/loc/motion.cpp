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

#include "percept/loc/motion.hpp"

#include <cmath>

namespace percept {
namespace {

constexpr double kWallGap = 1e-6;

// Moves one coordinate from `a` to `a + d` while the other coordinate stays
// at `b`; `along_x` selects which axis moves. Stops kWallGap short of the
// first boundary of a blocking cell, never moving backward past `a`.
double move_axis(const GridMap& map, double a, double b, double d,
                 bool along_x) {
  if (d == 0.0) return a;
  const int fixed = static_cast<int>(std::floor(b));
  auto blocked = [&](int cell) {
    return along_x ? map.obstacle(cell, fixed) : map.obstacle(fixed, cell);
  };
  const double target = a + d;
  if (d > 0.0) {
    // Crossing boundary `edge` enters cell `edge`; landing exactly on the
    // boundary counts as entering.
    for (double edge = std::floor(a) + 1.0; edge <= target; edge += 1.0) {
      if (blocked(static_cast<int>(edge))) {
        const double stop = edge - kWallGap;
        return stop < a ? a : stop;
      }
    }
  } else {
    // Crossing boundary `edge` enters cell `edge - 1`; landing exactly on
    // the boundary stays in cell `edge`.
    for (double edge = std::floor(a); edge > target; edge -= 1.0) {
      if (blocked(static_cast<int>(edge) - 1)) {
        const double stop = edge + kWallGap;
        return stop > a ? a : stop;
      }
    }
  }
  return target;
}

}  // namespace

std::array<double, 2> move_with_collision(const GridMap& map,
                                          std::array<double, 2> pos,
                                          std::array<double, 2> delta) {
  const double x = move_axis(map, pos[0], pos[1], delta[0], true);
  const double y = move_axis(map, pos[1], x, delta[1], false);
  return {x, y};
}

}  // namespace percept
