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

#ifndef PERCEPT_HARNESS_EPISODE_HPP_
#define PERCEPT_HARNESS_EPISODE_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "percept/harness/metrics.hpp"

namespace percept {

inline constexpr const char* kEpisodeLogVersion = "1";

/// One logged step: the exact action bits sent plus everything the
/// environment returned. Observations are stored as fingerprints, which is
/// enough to verify a replay bit-for-bit.
struct StepRecord {
  std::vector<float> base;
  std::vector<float> prediction;
  bool oracle = false;
  double reward = 0.0;
  double loss = 0.0;
  bool terminated = false;
  bool truncated = false;
  std::uint64_t observation_fingerprint = 0;
  std::vector<std::pair<std::string, double>> metrics;
};

/// Complete record of one episode. Feeding (seed, actions) back through a
/// fresh environment must reproduce rewards, losses, and observation
/// fingerprints exactly.
struct EpisodeLog {
  std::string env_id;
  std::uint64_t seed = 0;
  std::string split;
  std::string version = kEpisodeLogVersion;
  std::uint64_t reset_fingerprint = 0;
  std::vector<StepRecord> steps;
};

/// Per-step metric traces (reward and loss included) plus per-episode
/// summaries (first_correct / last_incorrect when accuracy was tracked),
/// ready for aggregate_metrics.
EpisodeMetrics episode_metrics(const EpisodeLog& log);

/// Newline-delimited JSON: a header record followed by one record per step.
std::string to_jsonl(const EpisodeLog& log);
EpisodeLog from_jsonl(const std::string& text);

void save_episode_log(const EpisodeLog& log, const std::string& path);
EpisodeLog load_episode_log(const std::string& path);

}  // namespace percept

#endif  // PERCEPT_HARNESS_EPISODE_HPP_
