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

#include "percept/loc/raycast.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "percept/core/error.hpp"

namespace percept {

double raycast(const GridMap& map, std::array<double, 2> origin,
               std::array<double, 2> dir) {
  const double norm = std::hypot(dir[0], dir[1]);
  if (!(norm > 0.0)) throw InvalidArgument("raycast direction is zero");
  const double dx = dir[0] / norm;
  const double dy = dir[1] / norm;

  int cx = static_cast<int>(std::floor(origin[0]));
  int cy = static_cast<int>(std::floor(origin[1]));
  if (map.obstacle(cx, cy)) {
    throw InvalidState("raycast origin inside obstacle cell");
  }

  const double inf = std::numeric_limits<double>::infinity();
  const int step_x = dx > 0.0 ? 1 : (dx < 0.0 ? -1 : 0);
  const int step_y = dy > 0.0 ? 1 : (dy < 0.0 ? -1 : 0);
  const double delta_x = dx != 0.0 ? 1.0 / std::abs(dx) : inf;
  const double delta_y = dy != 0.0 ? 1.0 / std::abs(dy) : inf;
  double t_max_x = inf;
  double t_max_y = inf;
  if (dx > 0.0) t_max_x = (cx + 1.0 - origin[0]) / dx;
  if (dx < 0.0) t_max_x = (cx - origin[0]) / dx;
  if (dy > 0.0) t_max_y = (cy + 1.0 - origin[1]) / dy;
  if (dy < 0.0) t_max_y = (cy - origin[1]) / dy;

  while (true) {
    double t;
    if (t_max_x <= t_max_y) {
      t = t_max_x;
      cx += step_x;
      t_max_x += delta_x;
    } else {
      t = t_max_y;
      cy += step_y;
      t_max_y += delta_y;
    }
    if (map.obstacle(cx, cy)) return t;
  }
}

std::array<float, kLidarBeamCount> lidar_scan(const GridMap& map,
                                              std::array<double, 2> origin) {
  const double s = std::sqrt(0.5);
  const std::array<std::array<double, 2>, kLidarBeamCount> dirs = {{
      {1.0, 0.0},
      {s, s},
      {0.0, 1.0},
      {-s, s},
      {-1.0, 0.0},
      {-s, -s},
      {0.0, -1.0},
      {s, -s},
  }};
  const double scale = static_cast<double>(std::max(map.width(), map.height()));
  std::array<float, kLidarBeamCount> out{};
  for (int k = 0; k < kLidarBeamCount; ++k) {
    const double d = raycast(map, origin, dirs[k]) / scale;
    out[k] = static_cast<float>(std::clamp(d, 0.0, 1.0));
  }
  return out;
}

}  // namespace percept
