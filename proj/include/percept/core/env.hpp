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

#ifndef PERCEPT_CORE_ENV_HPP_
#define PERCEPT_CORE_ENV_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "percept/core/rng.hpp"
#include "percept/core/task.hpp"
#include "percept/core/tensor.hpp"

namespace percept {

/// Base class for every environment. It owns the episode lifecycle, the
/// reward/loss accounting, and the standard per-step metrics; subclasses
/// implement only hidden-state dynamics and observation assembly.
///
/// Predictions never feed back into the dynamics: on_step receives the base
/// action alone, and the prediction is settled against the target the
/// subclass exposes after the transition. Oracle actions substitute that
/// target (as one-hot logits for classification) before the loss is taken.
class Environment {
 public:
  explicit Environment(TaskSpec spec);
  virtual ~Environment() = default;

  Environment(const Environment&) = delete;
  Environment& operator=(const Environment&) = delete;

  const TaskSpec& spec() const { return spec_; }

  /// Starts a new episode. Equal seeds yield bit-identical episodes.
  Observation reset(std::uint64_t seed);

  /// Advances one step. Throws LifecycleError before the first reset or after
  /// the episode has ended, InvalidArgument on malformed actions.
  StepOutcome step(const Action& action);

  /// Steps taken since the last reset.
  int step_index() const { return step_index_; }

  bool episode_done() const { return done_; }

 protected:
  /// Resets hidden state and returns the first observation.
  virtual Observation on_reset(Rng& rng) = 0;

  /// Applies the base action and returns the next observation. Subclasses set
  /// env_terminated for their own termination rules; the step-limit cutoff is
  /// applied by the caller. step_index() already counts this step.
  virtual Observation on_step(const std::vector<float>& base_action, Rng& rng,
                              bool& env_terminated) = 0;

  /// Label the current step's prediction is scored against. Must be
  /// overridden by classification environments.
  virtual int class_target() const;

  /// Float32 target vector the current step's prediction is scored against.
  /// Must be overridden by regression environments.
  virtual std::vector<float> regression_target() const;

  /// Hook for task-specific metrics beyond the standard set.
  virtual void append_extra_metrics(
      const std::vector<float>& prediction,
      std::vector<std::pair<std::string, double>>& metrics) const;

 private:
  void validate_action(const Action& action) const;

  TaskSpec spec_;
  std::optional<Rng> rng_;
  int step_index_ = 0;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace percept

#endif  // PERCEPT_CORE_ENV_HPP_
