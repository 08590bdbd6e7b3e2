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

#ifndef PERCEPT_HARNESS_SUBPROCESS_HPP_
#define PERCEPT_HARNESS_SUBPROCESS_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "percept/core/task.hpp"
#include "percept/harness/agents.hpp"

namespace percept {

/// Drives an external agent process over the line protocol. The command is
/// run through `/bin/sh -c`; frames go to its stdin, replies come from its
/// stdout (stderr passes through). The child is spawned lazily on the first
/// episode and told to close when this object is destroyed.
///
/// Every outgoing frame blocks until the matching reply arrives, so a child
/// that answers out of order or dies mid-episode raises ProtocolError.
class SubprocessAgent final : public Agent {
 public:
  explicit SubprocessAgent(std::string command);
  ~SubprocessAgent() override;

  SubprocessAgent(const SubprocessAgent&) = delete;
  SubprocessAgent& operator=(const SubprocessAgent&) = delete;

  void begin_episode(const TaskSpec& spec, std::uint64_t seed,
                     const Observation& first_obs) override;
  Action next_action() override;
  void feedback(const StepOutcome& outcome) override;

 private:
  void spawn();
  void send_line(const std::string& line);
  std::string read_line();
  Action expect_act(const std::string& frame, std::uint64_t seq);
  void expect_ack(const std::string& frame, std::uint64_t seq);

  std::string command_;
  int pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
  std::uint64_t next_seq_ = 1;
  bool hello_done_ = false;
  std::optional<Action> pending_;
};

}  // namespace percept

#endif  // PERCEPT_HARNESS_SUBPROCESS_HPP_
