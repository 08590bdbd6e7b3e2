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

#ifndef PERCEPT_CORE_TASK_HPP_
#define PERCEPT_CORE_TASK_HPP_

#include <string>
#include <utility>
#include <vector>

#include "percept/core/tensor.hpp"

namespace percept {

enum class LossKind { kCrossEntropy, kMeanSquaredError };

/// The space the agent predicts into: logits over K classes, or a real
/// vector for regression tasks.
struct PredictionSpace {
  enum class Kind { kClassification, kRegression };

  Kind kind;
  /// Number of classes (K >= 2) or regression dimension (>= 1).
  int size;

  static PredictionSpace classification(int classes);
  static PredictionSpace regression(int dim);
};

/// Declarative description of one environment, fixed at construction.
struct TaskSpec {
  std::string env_id;
  int base_action_dim = 0;
  PredictionSpace prediction_space{PredictionSpace::Kind::kClassification, 2};
  int step_limit = 1;
  LossKind loss_kind = LossKind::kCrossEntropy;
  double reward_bonus = 0.0;
  /// Agent-side POMDP discount; recorded as metadata, never used by the
  /// environment itself.
  double discount = 1.0;

  void validate() const;
};

/// One transition as seen by the agent.
struct StepOutcome {
  Observation observation;
  double reward = 0.0;
  double loss = 0.0;
  bool terminated = false;
  bool truncated = false;
  std::vector<std::pair<std::string, double>> metrics;
  /// The prediction the loss was computed from. Equal to the submitted one
  /// except for oracle actions, where it is the substituted ground truth;
  /// logging this keeps oracle episodes replayable.
  std::vector<float> effective_prediction;
};

/// Joint action: the base component moves the agent/sensor, the prediction
/// component is scored against the hidden target and never touches hidden
/// state. When oracle_prediction is set the environment substitutes the
/// ground-truth target at loss time (the harness debug channel); the
/// substituted value is reported back so logs stay replayable.
struct Action {
  std::vector<float> base;
  std::vector<float> prediction;
  bool oracle_prediction = false;
};

}  // namespace percept

#endif  // PERCEPT_CORE_TASK_HPP_
