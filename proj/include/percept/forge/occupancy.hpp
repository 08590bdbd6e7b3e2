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

#ifndef PERCEPT_FORGE_OCCUPANCY_HPP_
#define PERCEPT_FORGE_OCCUPANCY_HPP_

#include <cstdint>
#include <vector>

#include "percept/forge/binary_image.hpp"

namespace percept {

/// A 3D voxel bit field, x fastest then y then z.
struct OccupancyGrid3D {
  int nx = 0;
  int ny = 0;
  int nz = 0;
  std::vector<std::uint8_t> occupancy;

  static OccupancyGrid3D empty(int nx, int ny, int nz);

  bool at(int x, int y, int z) const {
    return occupancy[(static_cast<std::size_t>(z) * ny + y) * nx + x] != 0;
  }
  void set(int x, int y, int z, bool value) {
    occupancy[(static_cast<std::size_t>(z) * ny + y) * nx + x] = value ? 1 : 0;
  }
  int count() const;
};

/// Builds the mirrored erosion stack of an ink bitmap: one layer per kernel
/// size, mirrored about the depth midplane so the most-eroded layers sit
/// outermost and the raw image forms the thick waist of a lens profile.
/// kernel_sizes must be strictly increasing odd values.
OccupancyGrid3D build_occupancy(const BinaryImage& img,
                                const std::vector<int>& kernel_sizes);

}  // namespace percept

#endif  // PERCEPT_FORGE_OCCUPANCY_HPP_
