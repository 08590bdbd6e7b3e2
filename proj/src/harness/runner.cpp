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

#include "percept/harness/runner.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstring>
#include <exception>
#include <filesystem>
#include <thread>
#include <utility>

#include "percept/core/error.hpp"
#include "percept/core/tensor.hpp"
#include "percept/harness/subprocess.hpp"

namespace percept {
namespace {

constexpr const char* kExecPrefix = "exec:";

bool bits_equal(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

std::string episode_file_name(int index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "episode_%06d.jsonl", index);
  return buf;
}

}  // namespace

std::unique_ptr<Agent> make_agent(const std::string& selector) {
  if (selector.rfind(kExecPrefix, 0) == 0) {
    const std::string command = selector.substr(std::strlen(kExecPrefix));
    if (command.empty()) {
      throw ConfigError("exec: agent needs a command");
    }
    return std::make_unique<SubprocessAgent>(command);
  }
  const std::vector<std::string>& names = builtin_agent_names();
  if (std::find(names.begin(), names.end(), selector) == names.end()) {
    throw ConfigError("unknown agent '" + selector + "'");
  }
  return make_builtin_agent(selector);
}

EpisodeLog run_episode(Environment& env, Agent& agent, std::uint64_t seed,
                       const std::string& split) {
  EpisodeLog log;
  log.env_id = env.spec().env_id;
  log.seed = seed;
  log.split = split;
  const Observation first = env.reset(seed);
  log.reset_fingerprint = fingerprint(first);
  agent.begin_episode(env.spec(), seed, first);
  while (!env.episode_done()) {
    const Action action = agent.next_action();
    const StepOutcome outcome = env.step(action);
    StepRecord rec;
    rec.base = action.base;
    rec.prediction = outcome.effective_prediction;
    rec.oracle = action.oracle_prediction;
    rec.reward = outcome.reward;
    rec.loss = outcome.loss;
    rec.terminated = outcome.terminated;
    rec.truncated = outcome.truncated;
    rec.observation_fingerprint = fingerprint(outcome.observation);
    rec.metrics = outcome.metrics;
    log.steps.push_back(std::move(rec));
    agent.feedback(outcome);
  }
  return log;
}

std::vector<EpisodeLog> run_batch(const RunConfig& config) {
  if (config.episodes < 1) throw ConfigError("episodes must be >= 1");
  if (config.jobs < 1) throw ConfigError("jobs must be >= 1");
  const int jobs = std::min(config.jobs, config.episodes);

  std::vector<EpisodeLog> logs(static_cast<std::size_t>(config.episodes));
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(jobs));
  std::vector<std::thread> lanes;
  lanes.reserve(static_cast<std::size_t>(jobs));
  for (int lane = 0; lane < jobs; ++lane) {
    lanes.emplace_back([&, lane] {
      try {
        std::unique_ptr<Environment> env = make_env(config.env);
        std::unique_ptr<Agent> agent = make_agent(config.agent);
        for (int i = lane; i < config.episodes; i += jobs) {
          logs[static_cast<std::size_t>(i)] =
              run_episode(*env, *agent, config.seed + i, config.env.split);
        }
      } catch (...) {
        failures[static_cast<std::size_t>(lane)] = std::current_exception();
      }
    });
  }
  for (std::thread& t : lanes) t.join();
  for (const std::exception_ptr& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  if (!config.out_dir.empty()) {
    std::filesystem::create_directories(config.out_dir);
    for (int i = 0; i < config.episodes; ++i) {
      const std::filesystem::path path =
          std::filesystem::path(config.out_dir) / episode_file_name(i);
      save_episode_log(logs[static_cast<std::size_t>(i)], path.string());
    }
  }
  return logs;
}

ReplayReport replay_episode(const EpisodeLog& log,
                            const std::string& data_dir) {
  ReplayReport report;
  const auto fail = [&report](int step, const std::string& what) {
    report.ok = false;
    report.detail = (step < 0 ? std::string("reset")
                              : "step " + std::to_string(step)) +
                    ": " + what;
    return report;
  };

  EnvConfig env_config;
  env_config.env_id = log.env_id;
  env_config.split = log.split;
  env_config.data_dir = data_dir;
  const std::unique_ptr<Environment> env = make_env(env_config);

  const Observation first = env->reset(log.seed);
  if (fingerprint(first) != log.reset_fingerprint) {
    return fail(-1, "observation fingerprint mismatch");
  }
  for (std::size_t k = 0; k < log.steps.size(); ++k) {
    const int step = static_cast<int>(k);
    const StepRecord& rec = log.steps[k];
    if (env->episode_done()) {
      return fail(step, "environment ended before the log did");
    }
    Action action;
    action.base = rec.base;
    action.prediction = rec.prediction;
    action.oracle_prediction = rec.oracle;
    const StepOutcome outcome = env->step(action);
    if (!bits_equal(outcome.reward, rec.reward)) {
      return fail(step, "reward mismatch");
    }
    if (!bits_equal(outcome.loss, rec.loss)) {
      return fail(step, "loss mismatch");
    }
    if (outcome.terminated != rec.terminated ||
        outcome.truncated != rec.truncated) {
      return fail(step, "termination flag mismatch");
    }
    if (outcome.effective_prediction != rec.prediction) {
      return fail(step, "effective prediction mismatch");
    }
    if (fingerprint(outcome.observation) != rec.observation_fingerprint) {
      return fail(step, "observation fingerprint mismatch");
    }
  }
  if (!env->episode_done()) {
    return fail(static_cast<int>(log.steps.size()),
                "log ended before the environment did");
  }
  return report;
}

}  // namespace percept
