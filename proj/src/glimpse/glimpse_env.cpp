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

#include "percept/glimpse/glimpse_env.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

#include "percept/core/error.hpp"
#include "percept/core/ops.hpp"

namespace percept {

Tensor extract_glimpse(const Tensor& image, double center_x, double center_y,
                       int glimpse_size) {
  if (image.shape.size() != 3) {
    throw InvalidArgument("extract_glimpse: image must be rank 3 (H, W, C)");
  }
  const int height = image.shape[0];
  const int width = image.shape[1];
  const int channels = image.shape[2];
  if (glimpse_size < 1 || glimpse_size > std::min(width, height)) {
    throw InvalidArgument("extract_glimpse: window larger than image");
  }
  if (!std::isfinite(center_x) || !std::isfinite(center_y)) {
    throw InvalidArgument("extract_glimpse: non-finite center");
  }

  // Normalized center to pixel coordinates, then the nearest window origin
  // with halves rounding toward zero (so a 27/2 center puts a 5-px window at
  // origin 11, splitting the slack evenly).
  const auto origin = [&](double c, int size) {
    const double pixel = (c + 1.0) / 2.0 * (size - 1);
    const double ideal = pixel - (glimpse_size - 1) / 2.0;
    const int o = static_cast<int>(std::ceil(ideal - 0.5));
    return std::clamp(o, 0, size - glimpse_size);
  };
  const int ox = origin(center_x, width);
  const int oy = origin(center_y, height);

  Tensor out;
  out.shape = {glimpse_size, glimpse_size, channels};
  out.data.resize(static_cast<std::size_t>(glimpse_size) * glimpse_size *
                  channels);
  std::size_t k = 0;
  for (int y = 0; y < glimpse_size; ++y) {
    const std::size_t row =
        (static_cast<std::size_t>(oy + y) * width + ox) * channels;
    for (int i = 0; i < glimpse_size * channels; ++i) {
      out.data[k++] = image.data[row + static_cast<std::size_t>(i)];
    }
  }
  return out;
}

std::array<double, 2> move_glimpse(const std::array<double, 2>& pos,
                                   const std::array<double, 2>& action) {
  const std::vector<double> clipped =
      project_to_unit_disk(std::span<const double>(action.data(), 2));
  return {std::clamp(pos[0] + kGlimpseMoveScale * clipped[0], -1.0, 1.0),
          std::clamp(pos[1] + kGlimpseMoveScale * clipped[1], -1.0, 1.0)};
}

namespace {

TaskSpec glimpse_task(const std::string& env_id, PredictionSpace space,
                      LossKind loss) {
  TaskSpec spec;
  spec.env_id = env_id;
  spec.base_action_dim = 2;
  spec.prediction_space = space;
  spec.step_limit = kGlimpseStepLimit;
  spec.loss_kind = loss;
  return spec;
}

}  // namespace

GlimpseClassificationEnv::GlimpseClassificationEnv(
    const std::string& env_id, std::shared_ptr<const ImageCorpus> corpus,
    int glimpse_size)
    : Environment(glimpse_task(
          env_id, PredictionSpace::classification(corpus->label_count),
          LossKind::kCrossEntropy)),
      corpus_(std::move(corpus)),
      glimpse_size_(glimpse_size) {
  corpus_->validate();
  if (corpus_->labels.empty()) {
    throw InvalidArgument(env_id + ": corpus has no labels");
  }
}

Observation GlimpseClassificationEnv::observe() const {
  const Tensor& image = corpus_->images[static_cast<std::size_t>(image_index_)];
  Observation obs;
  obs["glimpse"] = extract_glimpse(image, pos_[0], pos_[1], glimpse_size_);
  obs["glimpse_pos"] =
      Tensor::vec({static_cast<float>(pos_[0]), static_cast<float>(pos_[1])});
  obs["time_step"] = Tensor::scalar(
      static_cast<float>(normalize_time(step_index(), spec().step_limit)));
  return obs;
}

Observation GlimpseClassificationEnv::on_reset(Rng& rng) {
  image_index_ = rng.uniform_int(static_cast<int>(corpus_->images.size()));
  pos_[0] = rng.uniform(-1.0, 1.0);
  pos_[1] = rng.uniform(-1.0, 1.0);
  return observe();
}

Observation GlimpseClassificationEnv::on_step(
    const std::vector<float>& base_action, Rng& /*rng*/,
    bool& /*env_terminated*/) {
  pos_ = move_glimpse(pos_, {static_cast<double>(base_action[0]),
                             static_cast<double>(base_action[1])});
  return observe();
}

int GlimpseClassificationEnv::class_target() const {
  return corpus_->labels[static_cast<std::size_t>(image_index_)];
}

GlimpseLocalizationEnv::GlimpseLocalizationEnv(
    const std::string& env_id, std::shared_ptr<const ImageCorpus> corpus,
    int glimpse_size)
    : Environment(glimpse_task(env_id, PredictionSpace::regression(2),
                               LossKind::kMeanSquaredError)),
      corpus_(std::move(corpus)),
      glimpse_size_(glimpse_size) {
  corpus_->validate();
}

Observation GlimpseLocalizationEnv::observe() const {
  const Tensor& image = corpus_->images[static_cast<std::size_t>(image_index_)];
  Observation obs;
  obs["glimpse"] = extract_glimpse(image, pos_[0], pos_[1], glimpse_size_);
  obs["glimpse_pos"] =
      Tensor::vec({static_cast<float>(pos_[0]), static_cast<float>(pos_[1])});
  obs["target_glimpse"] = target_glimpse_;
  obs["time_step"] = Tensor::scalar(
      static_cast<float>(normalize_time(step_index(), spec().step_limit)));
  return obs;
}

Observation GlimpseLocalizationEnv::on_reset(Rng& rng) {
  image_index_ = rng.uniform_int(static_cast<int>(corpus_->images.size()));
  pos_[0] = rng.uniform(-1.0, 1.0);
  pos_[1] = rng.uniform(-1.0, 1.0);
  // The scored target is the float32 snapshot, and the emitted patch is cut
  // at exactly that snapshot so the two always agree.
  target_pos_[0] = static_cast<float>(rng.uniform(-1.0, 1.0));
  target_pos_[1] = static_cast<float>(rng.uniform(-1.0, 1.0));
  target_glimpse_ =
      extract_glimpse(corpus_->images[static_cast<std::size_t>(image_index_)],
                      target_pos_[0], target_pos_[1], glimpse_size_);
  return observe();
}

Observation GlimpseLocalizationEnv::on_step(
    const std::vector<float>& base_action, Rng& /*rng*/,
    bool& /*env_terminated*/) {
  pos_ = move_glimpse(pos_, {static_cast<double>(base_action[0]),
                             static_cast<double>(base_action[1])});
  return observe();
}

std::vector<float> GlimpseLocalizationEnv::regression_target() const {
  return {target_pos_[0], target_pos_[1]};
}

}  // namespace percept
