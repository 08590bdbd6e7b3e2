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

#ifndef PERCEPT_GLIMPSE_GLIMPSE_ENV_HPP_
#define PERCEPT_GLIMPSE_GLIMPSE_ENV_HPP_

#include <array>
#include <memory>
#include <string>

#include "percept/core/env.hpp"
#include "percept/core/tensor.hpp"
#include "percept/glimpse/image_corpus.hpp"

namespace percept {

inline constexpr double kGlimpseMoveScale = 0.2;
inline constexpr int kGlimpseStepLimit = 16;

/// Cuts the G-by-G window centered at normalized coordinates c in [-1,1]^2
/// out of an HWC image. The center maps to pixels via p = (c+1)/2*(size-1);
/// the window origin is the nearest integer (halves round down) and is
/// clamped so the window never leaves the image.
Tensor extract_glimpse(const Tensor& image, double center_x, double center_y,
                       int glimpse_size);

/// One glimpse move: scaled norm-clipped action, clamped to [-1,1]^2.
std::array<double, 2> move_glimpse(const std::array<double, 2>& pos,
                                   const std::array<double, 2>& action);

/// Classify the underlying image while peeking through a movable glimpse.
/// Observation: glimpse, glimpse_pos, time_step.
class GlimpseClassificationEnv : public Environment {
 public:
  GlimpseClassificationEnv(const std::string& env_id,
                           std::shared_ptr<const ImageCorpus> corpus,
                           int glimpse_size);

 protected:
  Observation on_reset(Rng& rng) override;
  Observation on_step(const std::vector<float>& base_action, Rng& rng,
                      bool& env_terminated) override;
  int class_target() const override;

 private:
  Observation observe() const;

  std::shared_ptr<const ImageCorpus> corpus_;
  int glimpse_size_;
  int image_index_ = 0;
  std::array<double, 2> pos_ = {0.0, 0.0};
};

/// Locate a fixed target patch in the underlying image. Observation adds the
/// target patch itself; the prediction is scored against the target's
/// normalized position.
class GlimpseLocalizationEnv : public Environment {
 public:
  GlimpseLocalizationEnv(const std::string& env_id,
                         std::shared_ptr<const ImageCorpus> corpus,
                         int glimpse_size);

 protected:
  Observation on_reset(Rng& rng) override;
  Observation on_step(const std::vector<float>& base_action, Rng& rng,
                      bool& env_terminated) override;
  std::vector<float> regression_target() const override;

 private:
  Observation observe() const;

  std::shared_ptr<const ImageCorpus> corpus_;
  int glimpse_size_;
  int image_index_ = 0;
  std::array<double, 2> pos_ = {0.0, 0.0};
  std::array<float, 2> target_pos_ = {0.0f, 0.0f};
  Tensor target_glimpse_;
};

}  // namespace percept

#endif  // PERCEPT_GLIMPSE_GLIMPSE_ENV_HPP_
