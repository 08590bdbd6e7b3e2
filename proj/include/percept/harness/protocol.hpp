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

#ifndef PERCEPT_HARNESS_PROTOCOL_HPP_
#define PERCEPT_HARNESS_PROTOCOL_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "percept/core/task.hpp"
#include "percept/core/tensor.hpp"

namespace percept {

/// Wire protocol for external agents: newline-delimited JSON over the agent
/// process's standard streams. Tensors travel as base64 little-endian
/// float32 with an explicit shape, so round trips are bit-exact from any
/// language.
///
/// Frames from the environment ("type"): hello, reset (carries seed + first
/// observation), step (carries observation, reward, loss, termination
/// flags), close. Every frame carries a strictly increasing "seq" and must
/// be answered by exactly one agent frame with the same seq: an "act" frame
/// (base + prediction tensors, optional "oracle" flag) answers reset and
/// non-terminal step frames; an "ack" frame answers hello, close, and
/// terminal step frames.
inline constexpr int kProtocolVersion = 1;

std::string base64_encode(const std::vector<std::uint8_t>& bytes);
/// Throws DecodeError (with the offending byte offset) on bad characters or
/// bad padding.
std::vector<std::uint8_t> base64_decode(const std::string& text);

nlohmann::json tensor_to_json(const Tensor& t);
Tensor tensor_from_json(const nlohmann::json& j);
nlohmann::json observation_to_json(const Observation& obs);
Observation observation_from_json(const nlohmann::json& j);

// Environment-side encoders.
std::string encode_hello(std::uint64_t seq, const TaskSpec& spec);
std::string encode_reset(std::uint64_t seq, std::uint64_t seed,
                         const Observation& obs);
std::string encode_step(std::uint64_t seq, const StepOutcome& outcome);
std::string encode_close(std::uint64_t seq);

// Agent-side encoders.
std::string encode_act(std::uint64_t seq, const Action& action);
std::string encode_ack(std::uint64_t seq);

/// Agent reply as seen by the environment.
struct AgentReply {
  bool ack = false;
  std::uint64_t seq = 0;
  Action action;  // only meaningful when !ack
};
AgentReply decode_agent_reply(const std::string& line);

/// Environment frame as seen by the agent (used by tests and in-process
/// round trips).
struct EnvMessage {
  enum class Kind { kHello, kReset, kStep, kClose };
  Kind kind = Kind::kHello;
  std::uint64_t seq = 0;
  // hello
  std::string env_id;
  int base_action_dim = 0;
  PredictionSpace prediction_space;
  int step_limit = 0;
  double reward_bonus = 0.0;
  // reset
  std::uint64_t seed = 0;
  // reset + step
  Observation obs;
  // step
  double reward = 0.0;
  double loss = 0.0;
  bool terminated = false;
  bool truncated = false;
};
EnvMessage decode_env_message(const std::string& line);

}  // namespace percept

#endif  // PERCEPT_HARNESS_PROTOCOL_HPP_
