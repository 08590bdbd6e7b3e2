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

#ifndef PERCEPT_HARNESS_RUNNER_HPP_
#define PERCEPT_HARNESS_RUNNER_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "percept/core/env.hpp"
#include "percept/harness/agents.hpp"
#include "percept/harness/episode.hpp"
#include "percept/harness/registry.hpp"

namespace percept {

/// Builds an agent from a selector: a builtin name, or "exec:<command>" to
/// drive an external process over the line protocol. Unknown selectors throw
/// ConfigError.
std::unique_ptr<Agent> make_agent(const std::string& selector);

/// Runs one full episode and returns its complete log. The recorded
/// prediction of each step is the effective one (after any oracle
/// substitution), so the log replays bit-for-bit on its own.
EpisodeLog run_episode(Environment& env, Agent& agent, std::uint64_t seed,
                       const std::string& split);

struct RunConfig {
  EnvConfig env;
  std::string agent = "random";
  int episodes = 1;
  /// Episode i runs with seed `seed + i`.
  std::uint64_t seed = 0;
  int jobs = 1;
  /// When set, each episode log is written here as episode_NNNNNN.jsonl.
  std::string out_dir;
};

/// Runs `episodes` episodes, `jobs` at a time. Worker lane k owns one
/// environment and one agent and plays episodes k, k+jobs, ...; results come
/// back ordered by episode index, so the output is independent of `jobs`.
std::vector<EpisodeLog> run_batch(const RunConfig& config);

struct ReplayReport {
  bool ok = true;
  std::string detail;  // first mismatch, empty when ok
};

/// Replays a log against a freshly built environment and verifies rewards,
/// losses, flags, and observation fingerprints bit-for-bit.
ReplayReport replay_episode(const EpisodeLog& log, const std::string& data_dir);

}  // namespace percept

#endif  // PERCEPT_HARNESS_RUNNER_HPP_
