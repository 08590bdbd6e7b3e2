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

#ifndef PERCEPT_FORGE_BINARY_IMAGE_HPP_
#define PERCEPT_FORGE_BINARY_IMAGE_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace percept {

/// A 2D bit raster, row-major, origin at the top-left. Bit semantics are the
/// caller's: digit bitmaps use true = ink, grid maps use true = obstacle.
struct BinaryImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;

  static BinaryImage filled(int width, int height, bool value);

  bool at(int x, int y) const {
    return bits[static_cast<std::size_t>(y) * width + x] != 0;
  }
  void set(int x, int y, bool value) {
    bits[static_cast<std::size_t>(y) * width + x] = value ? 1 : 0;
  }
  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }
  int count() const;

  bool operator==(const BinaryImage&) const = default;
};

/// Morphological erosion with a k-by-k square structuring element: a bit
/// survives iff every bit under the centered element is set, with
/// out-of-bounds treated as unset. k must be odd.
BinaryImage binary_erode(const BinaryImage& img, int k);

/// Plain-text PBM (magic P1), one of the two raster formats this tool
/// exchanges with the outside world. Set bits are written as 1.
std::string to_pbm(const BinaryImage& img);
BinaryImage from_pbm(const std::string& text);

}  // namespace percept

#endif  // PERCEPT_FORGE_BINARY_IMAGE_HPP_
