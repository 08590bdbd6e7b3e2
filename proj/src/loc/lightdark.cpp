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

#include "percept/loc/lightdark.hpp"

#include <algorithm>
#include <cmath>

#include "percept/core/ops.hpp"

namespace percept {
namespace {

TaskSpec lightdark_task() {
  TaskSpec spec;
  spec.env_id = "LightDark";
  spec.base_action_dim = 2;
  spec.prediction_space = PredictionSpace::regression(2);
  spec.step_limit = kLightDarkStepLimit;
  spec.loss_kind = LossKind::kMeanSquaredError;
  spec.reward_bonus = kLightDarkBonus;
  return spec;
}

}  // namespace

double lightdark_brightness(double x) {
  const double d = x - kLightDarkBeamCenter;
  return std::exp(-d * d / (2.0 * kLightDarkBeamWidth * kLightDarkBeamWidth));
}

double lightdark_sigma(double x) {
  const double b = lightdark_brightness(x);
  return kLightDarkSigmaMin + (1.0 - b) * (kLightDarkSigmaMax - kLightDarkSigmaMin);
}

std::array<double, 2> lightdark_observe(std::array<double, 2> pos, Rng& rng) {
  const double sigma = lightdark_sigma(pos[0]);
  std::array<double, 2> obs;
  for (int i = 0; i < 2; ++i) {
    const double noisy = pos[i] + sigma * rng.gaussian();
    obs[i] = std::clamp(noisy, -kLightDarkBound, kLightDarkBound);
  }
  return obs;
}

LightDarkEnv::LightDarkEnv() : Environment(lightdark_task()) {}

Observation LightDarkEnv::make_observation(Rng& rng) const {
  const std::array<double, 2> noisy = lightdark_observe(pos_, rng);
  Observation obs;
  obs["noisy_position"] =
      Tensor::vec({static_cast<float>(noisy[0]), static_cast<float>(noisy[1])});
  obs["time_step"] = Tensor::scalar(
      static_cast<float>(normalize_time(step_index(), spec().step_limit)));
  return obs;
}

Observation LightDarkEnv::on_reset(Rng& rng) {
  pos_[0] = rng.uniform(-kLightDarkStartBound, kLightDarkStartBound);
  pos_[1] = rng.uniform(-kLightDarkStartBound, kLightDarkStartBound);
  target_ = {static_cast<float>(pos_[0]), static_cast<float>(pos_[1])};
  return make_observation(rng);
}

Observation LightDarkEnv::on_step(const std::vector<float>& base_action,
                                  Rng& rng, bool& env_terminated) {
  // The prediction is scored against where the agent stood when the previous
  // observation was taken, i.e. the pre-move position.
  target_ = {static_cast<float>(pos_[0]), static_cast<float>(pos_[1])};
  const std::vector<double> moved = project_to_unit_disk(base_action);
  pos_[0] += kLightDarkMoveScale * moved[0];
  pos_[1] += kLightDarkMoveScale * moved[1];
  if (std::abs(pos_[0]) > kLightDarkBound || std::abs(pos_[1]) > kLightDarkBound) {
    env_terminated = true;
  }
  return make_observation(rng);
}

std::vector<float> LightDarkEnv::regression_target() const {
  return {target_[0], target_[1]};
}

}  // namespace percept
