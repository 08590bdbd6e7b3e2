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

#ifndef PERCEPT_HARNESS_AGENTS_HPP_
#define PERCEPT_HARNESS_AGENTS_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "percept/core/task.hpp"
#include "percept/core/tensor.hpp"

namespace percept {

/// Turn-based counterpart of an Environment. The harness drives it as:
/// begin_episode(obs0), then next_action / feedback(outcome) per step until
/// the episode ends. feedback always follows the step it reports on,
/// including the terminal one.
class Agent {
 public:
  virtual ~Agent() = default;

  virtual void begin_episode(const TaskSpec& spec, std::uint64_t seed,
                             const Observation& obs) = 0;
  virtual Action next_action() = 0;
  virtual void feedback(const StepOutcome& outcome) = 0;
};

/// Scripted baselines:
///  - "random": base action uniform in the unit ball; uniform logits (zeros)
///    for classification, zero vector for regression.
///  - "stay": zero base action, zero predictions.
///  - "oracle": zero base action, ground-truth prediction via the oracle
///    substitution channel.
///  - "lightdark-seeker": walks toward the bright band and predicts the most
///    recent noisy position observation.
///  - "gradient-climber": moves toward the brightest pixel in the current
///    glimpse, zero predictions.
/// Unknown names throw InvalidArgument.
std::unique_ptr<Agent> make_builtin_agent(const std::string& name);

const std::vector<std::string>& builtin_agent_names();

}  // namespace percept

#endif  // PERCEPT_HARNESS_AGENTS_HPP_
