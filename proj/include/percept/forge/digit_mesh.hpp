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

#ifndef PERCEPT_FORGE_DIGIT_MESH_HPP_
#define PERCEPT_FORGE_DIGIT_MESH_HPP_

#include <cstdint>
#include <vector>

#include "percept/forge/binary_image.hpp"
#include "percept/forge/mesh.hpp"

namespace percept {

inline constexpr int kDigitImageSize = 500;
/// 5 pixels per millimetre, so the 500 px canvas spans exactly 100 mm.
inline constexpr double kMmPerPixel = 0.2;
inline constexpr double kLayerThicknessMm = 0.2;

/// Erosion kernel ladder {1, 3, ..., 19}: ten levels, twenty mirrored
/// layers, 4 mm total thickness.
const std::vector<int>& digit_kernel_sizes();

/// Bitmap-to-solid pipeline: mirrored erosion stack, isosurface extraction,
/// Laplacian smoothing, metric scaling. The result is watertight, centered
/// on the ink centroid in x/y, resting on z = 0, and fits the 100 mm square
/// platform. Throws InvalidArgument for blank or non-500x500 input.
TriangleMesh digit_to_mesh(const BinaryImage& img);

/// Procedural high-resolution digit bitmap: seeded stroke glyphs with pose
/// and thickness jitter, stand-ins for scanned handwriting.
BinaryImage synth_digit_bitmap(int digit, std::uint64_t seed);

/// Upsamples a single-channel grayscale image (values in [0, 1], row-major)
/// to the 500x500 canvas by bilinear interpolation, then binarizes at 0.5.
BinaryImage grayscale_to_digit_bitmap(const std::vector<float>& pixels,
                                      int width, int height);

}  // namespace percept

#endif  // PERCEPT_FORGE_DIGIT_MESH_HPP_
