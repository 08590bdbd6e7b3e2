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

#include "percept/loc/lidar_env.hpp"

#include <utility>
#include <vector>

#include "percept/core/error.hpp"
#include "percept/core/ops.hpp"
#include "percept/loc/map_gen.hpp"
#include "percept/loc/motion.hpp"
#include "percept/loc/raycast.hpp"

namespace percept {
namespace {

GridMap build_map(MapKind kind, std::uint64_t seed) {
  return kind == MapKind::kMaze ? generate_maze(seed) : generate_rooms(seed);
}

TaskSpec lidar_task(MapKind kind, bool dynamic_map) {
  TaskSpec spec;
  spec.env_id = std::string("LIDARLoc") +
                (kind == MapKind::kMaze ? "Maze" : "Rooms") +
                (dynamic_map ? "" : "Static");
  spec.base_action_dim = 2;
  spec.prediction_space = PredictionSpace::regression(2);
  spec.step_limit = kLidarLocStepLimit;
  spec.loss_kind = LossKind::kMeanSquaredError;
  return spec;
}

Tensor map_tensor(const GridMap& map) {
  Tensor t;
  t.shape = {map.height(), map.width(), 1};
  t.data.reserve(static_cast<std::size_t>(map.width()) * map.height());
  for (int y = 0; y < map.height(); ++y) {
    for (int x = 0; x < map.width(); ++x) {
      t.data.push_back(map.free_at(x, y) ? 1.0f : 0.0f);
    }
  }
  return t;
}

}  // namespace

LidarLocEnv::LidarLocEnv(MapKind kind, bool dynamic_map)
    : Environment(lidar_task(kind, dynamic_map)),
      kind_(kind),
      dynamic_map_(dynamic_map),
      map_(build_map(kind, kStaticMapSeed)) {}

std::array<float, 2> LidarLocEnv::normalized_position() const {
  std::array<float, 2> out;
  out[0] = static_cast<float>(2.0 * pos_[0] / (map_.width() - 1) - 1.0);
  out[1] = static_cast<float>(2.0 * pos_[1] / (map_.height() - 1) - 1.0);
  return out;
}

Observation LidarLocEnv::make_observation() const {
  Observation obs;
  const auto scan = lidar_scan(map_, pos_);
  obs["lidar"] = Tensor::vec({scan.begin(), scan.end()});
  obs["odometry"] = Tensor::vec({odometry_[0], odometry_[1]});
  obs["time_step"] = Tensor::scalar(
      static_cast<float>(normalize_time(step_index(), spec().step_limit)));
  if (dynamic_map_) obs["map"] = map_tensor(map_);
  return obs;
}

Observation LidarLocEnv::on_reset(Rng& rng) {
  if (dynamic_map_) map_ = build_map(kind_, rng.next_u64());
  const auto free_list = map_.free_cells();
  if (free_list.empty()) throw InvalidState("map has no free cells");
  const auto [cx, cy] =
      free_list[rng.uniform_int(static_cast<int>(free_list.size()))];
  pos_ = {cx + 0.5, cy + 0.5};
  odometry_ = {0.0f, 0.0f};
  accumulated_odometry_ = {0.0, 0.0};
  target_ = normalized_position();
  return make_observation();
}

Observation LidarLocEnv::on_step(const std::vector<float>& base_action,
                                 Rng& /*rng*/, bool& /*env_terminated*/) {
  const std::vector<double> delta = project_to_unit_disk(base_action);
  const std::array<double, 2> moved =
      move_with_collision(map_, pos_, {delta[0], delta[1]});
  odometry_[0] = static_cast<float>(moved[0] - pos_[0]);
  odometry_[1] = static_cast<float>(moved[1] - pos_[1]);
  accumulated_odometry_[0] += moved[0] - pos_[0];
  accumulated_odometry_[1] += moved[1] - pos_[1];
  pos_ = moved;
  target_ = normalized_position();
  return make_observation();
}

std::vector<float> LidarLocEnv::regression_target() const {
  return {target_[0], target_[1]};
}

}  // namespace percept
