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

#include "percept/forge/occupancy.hpp"

#include <cstddef>

#include "percept/core/error.hpp"

namespace percept {

OccupancyGrid3D OccupancyGrid3D::empty(int nx, int ny, int nz) {
  if (nx <= 0 || ny <= 0 || nz <= 0) {
    throw InvalidArgument("OccupancyGrid3D: dimensions must be positive");
  }
  OccupancyGrid3D grid;
  grid.nx = nx;
  grid.ny = ny;
  grid.nz = nz;
  grid.occupancy.assign(
      static_cast<std::size_t>(nx) * ny * static_cast<std::size_t>(nz), 0);
  return grid;
}

int OccupancyGrid3D::count() const {
  int n = 0;
  for (std::uint8_t b : occupancy) n += b != 0;
  return n;
}

OccupancyGrid3D build_occupancy(const BinaryImage& img,
                                const std::vector<int>& kernel_sizes) {
  if (kernel_sizes.empty()) {
    throw InvalidArgument("build_occupancy: empty kernel list");
  }
  for (std::size_t i = 0; i < kernel_sizes.size(); ++i) {
    if (kernel_sizes[i] <= 0 || kernel_sizes[i] % 2 == 0) {
      throw InvalidArgument("build_occupancy: kernel sizes must be odd");
    }
    if (i > 0 && kernel_sizes[i] <= kernel_sizes[i - 1]) {
      throw InvalidArgument(
          "build_occupancy: kernel sizes must be strictly increasing");
    }
  }

  const int levels = static_cast<int>(kernel_sizes.size());
  OccupancyGrid3D grid =
      OccupancyGrid3D::empty(img.width, img.height, 2 * levels);
  BinaryImage layer = img;
  int applied = 1;
  for (int level = 0; level < levels; ++level) {
    // Erosion composes: growing the kernel from the previous level erodes
    // incrementally instead of from scratch.
    const int k = kernel_sizes[level];
    if (k > applied) {
      layer = binary_erode(layer, k - applied + 1);
      applied = k;
    }
    // Level 0 (least eroded) fills the two middle layers; deeper erosion
    // levels move outward symmetrically.
    const int z_lower = levels - 1 - level;
    const int z_upper = levels + level;
    for (int y = 0; y < img.height; ++y) {
      for (int x = 0; x < img.width; ++x) {
        if (!layer.at(x, y)) continue;
        grid.set(x, y, z_lower, true);
        grid.set(x, y, z_upper, true);
      }
    }
  }
  return grid;
}

}  // namespace percept
