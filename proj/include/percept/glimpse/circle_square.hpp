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

#ifndef PERCEPT_GLIMPSE_CIRCLE_SQUARE_HPP_
#define PERCEPT_GLIMPSE_CIRCLE_SQUARE_HPP_

#include <cstdint>
#include <utility>

#include "percept/core/tensor.hpp"
#include "percept/glimpse/image_corpus.hpp"

namespace percept {

inline constexpr int kCircleSquareImageSize = 28;
inline constexpr int kCircleSquareCorpusSize = 1568;
inline constexpr int kCircleSquareTestSize = 256;

/// One 28x28x1 sample: a bright 1-px shape outline (label 0 = circle,
/// 1 = square) over a radial guide gradient 0.85/(1 + d/8) centered on the
/// shape, so the brightest background pixel marks the shape center while
/// only outline pixels exceed 0.9. Size and position are seeded draws.
std::pair<Tensor, int> generate_circle_square(std::uint64_t seed);

/// The full fixed corpus, seeds 0..1567; the last 256 images form the test
/// split.
ImageCorpus circle_square_corpus();

}  // namespace percept

#endif  // PERCEPT_GLIMPSE_CIRCLE_SQUARE_HPP_
