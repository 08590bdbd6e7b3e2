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

#include "percept/harness/constants.hpp"

namespace percept {

nlohmann::json constants_table() {
  nlohmann::json t;
  t["step_limits"] = {
      {"CircleSquare", 16},      {"MNIST", 16},
      {"CIFAR10", 16},           {"TinyImageNet", 16},
      {"CIFAR10Loc", 16},        {"TinyImageNetLoc", 16},
      {"LightDark", 16},         {"LIDARLocMazeStatic", 16},
      {"LIDARLocMaze", 16},      {"LIDARLocRoomsStatic", 16},
      {"LIDARLocRooms", 16},     {"TactileMNIST", 16},
      {"Starstruck", 32},        {"Toolbox", 64},
      {"TactileMNISTVolume", 32},
  };
  t["action_regularization"] = 1e-3;
  t["glimpse_move_scale"] = 0.2;
  t["glimpse_sizes"] = {
      {"CircleSquare", 5},     {"MNIST", 5},
      {"CIFAR10", 5},          {"TinyImageNet", 10},
      {"CIFAR10Loc", 5},       {"TinyImageNetLoc", 10},
  };
  t["lightdark_move_scale"] = 0.15;
  t["lightdark_reward_bonus"] = 0.1;
  t["lidar_beam_count"] = 8;
  t["maze_size"] = 21;
  t["rooms_size"] = 32;
  t["gel_thickness_mm"] = 4.25;
  t["platform_side_mm"] = 100.0;
  t["tactile_image_size"] = 64;
  t["sensor_footprint_mm"] = 14.0;
  t["workspace_xy_mm"] = 60.0;
  t["workspace_z_mm"] = 30.0;
  t["sensor_step_scale_mm"] = {20.0, 20.0, 10.0};
  t["volume_ref_mm3"] = 20000.0;
  t["digit_image_size"] = 500;
  t["digit_mm_per_pixel"] = 0.2;
  t["mnist3d_per_class"] = {
      {"train", 1148}, {"test", 100},         {"holdout", 50},
      {"printed_train", 50}, {"printed_test", 10},
  };
  t["mnist3d_total"] = 13580;
  t["circle_square_corpus_size"] = 1568;
  t["circle_square_test_size"] = 256;
  t["starstruck_corpus_size"] = 3300;
  t["starstruck_test_size"] = 300;
  return t;
}

}  // namespace percept
