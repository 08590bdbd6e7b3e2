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

#ifndef PERCEPT_LOC_LIGHTDARK_HPP_
#define PERCEPT_LOC_LIGHTDARK_HPP_

#include <array>

#include "percept/core/env.hpp"
#include "percept/core/rng.hpp"

namespace percept {

inline constexpr double kLightDarkMoveScale = 0.15;
inline constexpr double kLightDarkBound = 2.0;
inline constexpr double kLightDarkStartBound = 1.0;
inline constexpr double kLightDarkBeamCenter = 0.75;
inline constexpr double kLightDarkBeamWidth = 0.4;
inline constexpr double kLightDarkSigmaMin = 0.01;
inline constexpr double kLightDarkSigmaMax = 0.5;
inline constexpr double kLightDarkBonus = 0.1;
inline constexpr int kLightDarkStepLimit = 16;

/// Light intensity at horizontal position x: a vertical beam centered at
/// x = 0.75, Gaussian falloff of width 0.4, peak value 1.
double lightdark_brightness(double x);

/// Observation noise level: sigma_min in full light, sigma_max in the dark,
/// interpolated linearly in brightness.
double lightdark_sigma(double x);

/// Position plus isotropic Gaussian noise (x drawn first), each component
/// clamped to the world bounds [-2, 2].
std::array<double, 2> lightdark_observe(std::array<double, 2> pos, Rng& rng);

/// Planar point agent that must report where it was when the latest
/// observation was taken. Position noise shrinks near the bright beam, so
/// accurate reports require walking toward the light. Leaving the world
/// bounds ends the episode.
class LightDarkEnv : public Environment {
 public:
  LightDarkEnv();

  /// True position (exposed for tests and oracles).
  std::array<double, 2> position() const { return pos_; }

 protected:
  Observation on_reset(Rng& rng) override;
  Observation on_step(const std::vector<float>& base_action, Rng& rng,
                      bool& env_terminated) override;
  std::vector<float> regression_target() const override;

 private:
  Observation make_observation(Rng& rng) const;

  std::array<double, 2> pos_{};
  std::array<float, 2> target_{};
};

}  // namespace percept

#endif  // PERCEPT_LOC_LIGHTDARK_HPP_
