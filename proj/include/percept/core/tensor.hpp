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

#ifndef PERCEPT_CORE_TENSOR_HPP_
#define PERCEPT_CORE_TENSOR_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace percept {

/// Dense float32 tensor. Observations, actions, and predictions travel as
/// float32 end to end (also on the wire), so determinism and replay are a
/// matter of comparing bits. Rank 0 (empty shape) denotes a scalar.
struct Tensor {
  std::vector<int> shape;
  std::vector<float> data;

  static Tensor scalar(float v) { return Tensor{{}, {v}}; }
  static Tensor vec(std::vector<float> v);
  static Tensor zeros(std::vector<int> shape);

  std::int64_t element_count() const;
  /// True if data matches the shape's element count.
  bool consistent() const { return element_count() == static_cast<std::int64_t>(data.size()); }

  friend bool operator==(const Tensor&, const Tensor&) = default;
};

/// Named observation bundle. std::map keeps key order deterministic for
/// hashing and serialization.
using Observation = std::map<std::string, Tensor>;

/// FNV-1a over shapes and raw float bits; stable fingerprint used by episode
/// logs to verify byte-identical observations on replay.
std::uint64_t fingerprint(const Tensor& t);
std::uint64_t fingerprint(const Observation& obs);

}  // namespace percept

#endif  // PERCEPT_CORE_TENSOR_HPP_
