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

#ifndef PERCEPT_LOC_LIDAR_ENV_HPP_
#define PERCEPT_LOC_LIDAR_ENV_HPP_

#include <array>
#include <string>

#include "percept/core/env.hpp"
#include "percept/loc/grid_map.hpp"

namespace percept {

inline constexpr int kLidarLocStepLimit = 16;
inline constexpr std::uint64_t kStaticMapSeed = 0;

/// Self-localization from range readings. The agent moves up to one cell per
/// step (wall sliding), senses eight normalized beam distances plus its
/// realized displacement, and must report its position normalized to
/// [-1, 1]^2. Static variants keep one fixed map and omit it from the
/// observation; dynamic variants generate a fresh map each episode and
/// include the bitmap (free = 1).
class LidarLocEnv : public Environment {
 public:
  LidarLocEnv(MapKind kind, bool dynamic_map);

  const GridMap& map() const { return map_; }
  std::array<double, 2> position() const { return pos_; }

  /// Position mapped to [-1, 1]^2 via 2 * p / (size - 1) - 1.
  std::array<float, 2> normalized_position() const;

 protected:
  Observation on_reset(Rng& rng) override;
  Observation on_step(const std::vector<float>& base_action, Rng& rng,
                      bool& env_terminated) override;
  std::vector<float> regression_target() const override;

 private:
  Observation make_observation() const;

  MapKind kind_;
  bool dynamic_map_;
  GridMap map_;
  std::array<double, 2> pos_{};
  std::array<float, 2> odometry_{};
  std::array<double, 2> accumulated_odometry_{};
  std::array<float, 2> target_{};
};

}  // namespace percept

#endif  // PERCEPT_LOC_LIDAR_ENV_HPP_
