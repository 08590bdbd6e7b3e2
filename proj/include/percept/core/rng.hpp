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

#ifndef PERCEPT_CORE_RNG_HPP_
#define PERCEPT_CORE_RNG_HPP_

#include <cstdint>

namespace percept {

/// Deterministic counter-based generator (splitmix64 core). All sampling is
/// implemented here rather than with std:: distributions so that streams are
/// bit-reproducible across standard library implementations. `split` derives
/// an independent child stream from the current state and a tag without
/// advancing the parent, which keeps per-object substreams stable no matter
/// how much the parent is consumed afterwards.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform double in [0, 1).
  double uniform();
  /// Uniform double in (0, 1]; safe as a log() argument.
  double uniform_pos();
  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [0, n); n must be positive.
  int uniform_int(int n);
  /// Standard normal via Box-Muller.
  double gaussian();
  double gaussian(double mean, double stddev);

  Rng split(std::uint64_t tag) const;

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

/// splitmix64 finalizer; also used to whiten externally supplied seeds.
std::uint64_t mix_u64(std::uint64_t x);

}  // namespace percept

#endif  // PERCEPT_CORE_RNG_HPP_
