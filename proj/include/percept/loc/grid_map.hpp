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

#ifndef PERCEPT_LOC_GRID_MAP_HPP_
#define PERCEPT_LOC_GRID_MAP_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "percept/forge/binary_image.hpp"

namespace percept {

enum class MapKind { kMaze, kRooms };

/// Occupancy bitmap for the localization worlds. Cell (x, y) covers the unit
/// square [x, x+1) by [y, y+1); set bits are obstacles. Valid maps have a
/// full obstacle border and one 4-connected free region.
struct GridMap {
  BinaryImage cells;
  MapKind kind = MapKind::kMaze;

  int width() const { return cells.width; }
  int height() const { return cells.height; }
  bool obstacle(int x, int y) const {
    return !cells.in_bounds(x, y) || cells.at(x, y);
  }
  bool free_at(int x, int y) const { return !obstacle(x, y); }

  /// Cell coordinates of every free cell, row-major order.
  std::vector<std::pair<int, int>> free_cells() const;

  /// Border closed and free region 4-connected and nonempty.
  bool valid() const;
};

/// Bitmap serialization (plain PBM, obstacle = 1) with a one-line sidecar
/// manifest recording kind and generator seed.
void save_grid_map(const GridMap& map, std::uint64_t seed,
                   const std::string& pbm_path,
                   const std::string& manifest_path);
GridMap load_grid_map(const std::string& pbm_path, MapKind kind);

}  // namespace percept

#endif  // PERCEPT_LOC_GRID_MAP_HPP_
