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

#include "percept/glimpse/circle_square.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "percept/core/rng.hpp"

namespace percept {

std::pair<Tensor, int> generate_circle_square(std::uint64_t seed) {
  constexpr int kSize = kCircleSquareImageSize;
  Rng rng(seed);
  const int label = rng.uniform_int(2);
  const double radius = rng.uniform(3.0, 6.0);
  // Shape plus a 1-px margin stays inside the frame.
  const double lo = radius + 1.0;
  const double hi = kSize - 2.0 - radius;
  const double cx = rng.uniform(lo, hi);
  const double cy = rng.uniform(lo, hi);

  Tensor image;
  image.shape = {kSize, kSize, 1};
  image.data.resize(static_cast<std::size_t>(kSize) * kSize);
  std::size_t k = 0;
  for (int y = 0; y < kSize; ++y) {
    for (int x = 0; x < kSize; ++x, ++k) {
      const double dx = x - cx;
      const double dy = y - cy;
      const double dist = std::hypot(dx, dy);
      const bool on_shape =
          label == 0 ? std::abs(dist - radius) <= 0.6
                     : std::abs(std::max(std::abs(dx), std::abs(dy)) -
                                radius) <= 0.5;
      if (on_shape) {
        image.data[k] = 1.0f;
      } else {
        image.data[k] = static_cast<float>(0.85 / (1.0 + dist / 8.0));
      }
    }
  }
  return {std::move(image), label};
}

ImageCorpus circle_square_corpus() {
  ImageCorpus corpus;
  corpus.width = kCircleSquareImageSize;
  corpus.height = kCircleSquareImageSize;
  corpus.channels = 1;
  corpus.label_count = 2;
  for (int seed = 0; seed < kCircleSquareCorpusSize; ++seed) {
    auto [image, label] =
        generate_circle_square(static_cast<std::uint64_t>(seed));
    corpus.images.push_back(std::move(image));
    corpus.labels.push_back(label);
  }
  corpus.validate();
  return corpus;
}

}  // namespace percept
