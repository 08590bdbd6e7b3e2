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

#ifndef PERCEPT_CORE_OPS_HPP_
#define PERCEPT_CORE_OPS_HPP_

#include <span>
#include <vector>

namespace percept {

double l2_norm(std::span<const double> v);
double l2_norm(std::span<const float> v);

/// Norm-clips v into the closed unit ball: vectors with ||v|| <= 1 pass
/// through unchanged, longer ones are scaled down to unit length. This is the
/// single shared interpretation of "projected onto the unit circle" used by
/// every environment's action preprocessing; change it here to change it
/// everywhere. Throws InvalidArgument on non-finite input.
std::vector<double> project_to_unit_disk(std::span<const double> v);
std::vector<double> project_to_unit_disk(std::span<const float> v);

/// -log softmax(logits)[label], evaluated with max subtraction. Requires at
/// least two classes and a label in range.
double cross_entropy(std::span<const float> logits, int label);

/// Mean of squared componentwise differences; lengths must match.
double mse(std::span<const float> pred, std::span<const float> target);

/// bonus - 1e-3 * ||base_action|| - loss. The regularizer applies to the raw
/// (pre-projection) action.
double step_reward(std::span<const float> base_action, double loss, double bonus);

/// Linear map of step_index in [0, step_limit] onto [-1, 1].
double normalize_time(int step_index, int step_limit);

constexpr double kActionRegularization = 1e-3;

}  // namespace percept

#endif  // PERCEPT_CORE_OPS_HPP_
