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

#include "percept/core/env.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

#include "percept/core/error.hpp"
#include "percept/core/ops.hpp"
#include "percept/harness/metrics.hpp"

namespace percept {

namespace {

// Large enough that softmax over {kOracleLogit, 0, ..., 0} rounds to an exact
// one-hot in double precision, making the oracle's cross-entropy exactly 0.
constexpr float kOracleLogit = 1000.0f;

}  // namespace

PredictionSpace PredictionSpace::classification(int classes) {
  if (classes < 2) {
    throw InvalidArgument("classification space needs at least 2 classes");
  }
  PredictionSpace space;
  space.kind = Kind::kClassification;
  space.size = classes;
  return space;
}

PredictionSpace PredictionSpace::regression(int dims) {
  if (dims < 1) {
    throw InvalidArgument("regression space needs at least 1 dimension");
  }
  PredictionSpace space;
  space.kind = Kind::kRegression;
  space.size = dims;
  return space;
}

void TaskSpec::validate() const {
  if (env_id.empty()) throw InvalidArgument("TaskSpec: empty env_id");
  if (base_action_dim < 1) {
    throw InvalidArgument("TaskSpec: base_action_dim must be positive");
  }
  if (step_limit < 1) {
    throw InvalidArgument("TaskSpec: step_limit must be at least 1");
  }
  const bool classification =
      prediction_space.kind == PredictionSpace::Kind::kClassification;
  if (classification != (loss_kind == LossKind::kCrossEntropy)) {
    throw InvalidArgument("TaskSpec: loss kind mismatches prediction space");
  }
  if (classification && prediction_space.size < 2) {
    throw InvalidArgument("TaskSpec: classification needs at least 2 classes");
  }
  if (!classification && prediction_space.size < 1) {
    throw InvalidArgument("TaskSpec: regression needs at least 1 dimension");
  }
  if (!std::isfinite(reward_bonus)) {
    throw InvalidArgument("TaskSpec: reward_bonus must be finite");
  }
  if (!(discount > 0.0 && discount <= 1.0)) {
    throw InvalidArgument("TaskSpec: discount must be in (0, 1]");
  }
}

Environment::Environment(TaskSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
}

Observation Environment::reset(std::uint64_t seed) {
  rng_.emplace(seed);
  step_index_ = 0;
  started_ = true;
  done_ = false;
  return on_reset(*rng_);
}

StepOutcome Environment::step(const Action& action) {
  if (!started_) throw LifecycleError("step before reset");
  if (done_) throw LifecycleError("step after episode end; call reset");
  validate_action(action);

  ++step_index_;
  bool env_terminated = false;
  StepOutcome out;
  out.observation = on_step(action.base, *rng_, env_terminated);

  std::vector<float> effective = action.prediction;
  if (spec_.loss_kind == LossKind::kCrossEntropy) {
    const int label = class_target();
    if (action.oracle_prediction) {
      effective.assign(static_cast<std::size_t>(spec_.prediction_space.size),
                       0.0f);
      effective[static_cast<std::size_t>(label)] = kOracleLogit;
    }
    out.loss = cross_entropy(effective, label);
    const ClassificationStepMetrics step_metrics =
        classification_metrics(effective, label);
    out.metrics.emplace_back("accuracy", step_metrics.accuracy);
    out.metrics.emplace_back("correct_label_prob",
                             step_metrics.correct_label_prob);
  } else {
    const std::vector<float> target = regression_target();
    if (action.oracle_prediction) effective = target;
    out.loss = mse(effective, target);
    const RegressionStepMetrics step_metrics =
        regression_metrics(effective, target);
    out.metrics.emplace_back("mse", step_metrics.mse);
    out.metrics.emplace_back("euclidean_distance",
                             step_metrics.euclidean_distance);
  }
  append_extra_metrics(effective, out.metrics);

  out.reward = step_reward(action.base, out.loss, spec_.reward_bonus);
  out.terminated = env_terminated || step_index_ >= spec_.step_limit;
  out.truncated = false;
  out.effective_prediction = std::move(effective);
  done_ = out.terminated || out.truncated;
  return out;
}

int Environment::class_target() const {
  throw InvalidState(spec_.env_id + " is not a classification environment");
}

std::vector<float> Environment::regression_target() const {
  throw InvalidState(spec_.env_id + " is not a regression environment");
}

void Environment::append_extra_metrics(
    const std::vector<float>& /*prediction*/,
    std::vector<std::pair<std::string, double>>& /*metrics*/) const {}

void Environment::validate_action(const Action& action) const {
  if (action.base.size() != static_cast<std::size_t>(spec_.base_action_dim)) {
    throw InvalidArgument("action: base dimension mismatch for " +
                          spec_.env_id);
  }
  for (float v : action.base) {
    if (!std::isfinite(v)) {
      throw InvalidArgument("action: non-finite base component");
    }
  }
  if (action.oracle_prediction && action.prediction.empty()) {
    return;  // the environment fills the prediction in
  }
  if (action.prediction.size() !=
      static_cast<std::size_t>(spec_.prediction_space.size)) {
    throw InvalidArgument("action: prediction dimension mismatch for " +
                          spec_.env_id);
  }
  if (!action.oracle_prediction) {
    for (float v : action.prediction) {
      if (!std::isfinite(v)) {
        throw InvalidArgument("action: non-finite prediction component");
      }
    }
  }
}

}  // namespace percept
