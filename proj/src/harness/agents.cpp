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

#include "percept/harness/agents.hpp"

#include <cmath>
#include <cstddef>
#include <optional>

#include "percept/core/error.hpp"
#include "percept/core/rng.hpp"

namespace percept {
namespace {

// Builtins draw from a stream split off the episode seed so their choices
// never correlate with the environment's own draws.
constexpr std::uint64_t kAgentStreamTag = 0xA6E57;

std::vector<float> zero_prediction(const TaskSpec& spec) {
  return std::vector<float>(
      static_cast<std::size_t>(spec.prediction_space.size), 0.0f);
}

class ScriptedAgent : public Agent {
 public:
  void begin_episode(const TaskSpec& spec, std::uint64_t seed,
                     const Observation& obs) override {
    spec_ = spec;
    rng_.emplace(Rng(seed).split(kAgentStreamTag));
    on_begin(obs);
  }

  void feedback(const StepOutcome& outcome) override {
    on_observation(outcome.observation);
  }

 protected:
  virtual void on_begin(const Observation& obs) { on_observation(obs); }
  virtual void on_observation(const Observation& /*obs*/) {}

  TaskSpec spec_;
  std::optional<Rng> rng_;
};

class RandomAgent : public ScriptedAgent {
 public:
  Action next_action() override {
    Action a;
    a.base.resize(static_cast<std::size_t>(spec_.base_action_dim));
    // Uniform in the unit ball by rejection from the enclosing cube.
    while (true) {
      double norm_sq = 0.0;
      for (auto& v : a.base) {
        const double x = rng_->uniform(-1.0, 1.0);
        v = static_cast<float>(x);
        norm_sq += x * x;
      }
      if (norm_sq <= 1.0) break;
    }
    a.prediction = zero_prediction(spec_);
    return a;
  }
};

class StayAgent : public ScriptedAgent {
 public:
  Action next_action() override {
    Action a;
    a.base.assign(static_cast<std::size_t>(spec_.base_action_dim), 0.0f);
    a.prediction = zero_prediction(spec_);
    return a;
  }
};

class OracleAgent : public ScriptedAgent {
 public:
  Action next_action() override {
    Action a;
    a.base.assign(static_cast<std::size_t>(spec_.base_action_dim), 0.0f);
    a.oracle_prediction = true;
    return a;
  }
};

class LightdarkSeekerAgent : public ScriptedAgent {
 public:
  Action next_action() override {
    Action a;
    // Head for the low-noise band at x = 0.75 and predict the position the
    // latest observation reported, which is exactly what the next step is
    // scored against.
    double dx = 0.75 - last_[0];
    double dy = -last_[1];
    const double norm = std::hypot(dx, dy);
    if (norm > 1.0) {
      dx /= norm;
      dy /= norm;
    }
    a.base = {static_cast<float>(dx), static_cast<float>(dy)};
    a.prediction = {last_[0], last_[1]};
    return a;
  }

 protected:
  void on_observation(const Observation& obs) override {
    const auto it = obs.find("noisy_position");
    if (it == obs.end() || it->second.data.size() != 2) {
      throw InvalidState("lightdark-seeker: observation lacks noisy_position");
    }
    last_ = {it->second.data[0], it->second.data[1]};
  }

 private:
  std::array<float, 2> last_ = {0.0f, 0.0f};
};

class GradientClimberAgent : public ScriptedAgent {
 public:
  Action next_action() override {
    Action a;
    a.base = {static_cast<float>(dir_[0]), static_cast<float>(dir_[1])};
    a.prediction = zero_prediction(spec_);
    return a;
  }

 protected:
  void on_observation(const Observation& obs) override {
    const auto it = obs.find("glimpse");
    if (it == obs.end() || it->second.shape.size() != 3) {
      throw InvalidState("gradient-climber: observation lacks a glimpse");
    }
    const Tensor& g = it->second;
    const int rows = g.shape[0];
    const int cols = g.shape[1];
    const int channels = g.shape[2];
    float best = -1.0f;
    int best_r = 0;
    int best_c = 0;
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        float v = 0.0f;
        for (int ch = 0; ch < channels; ++ch) {
          v += g.data[static_cast<std::size_t>((r * cols + c) * channels + ch)];
        }
        if (v > best) {
          best = v;
          best_r = r;
          best_c = c;
        }
      }
    }
    // Image rows grow with +y in glimpse coordinates, columns with +x.
    const double dr = best_r - (rows - 1) / 2.0;
    const double dc = best_c - (cols - 1) / 2.0;
    const double norm = std::hypot(dc, dr);
    if (norm > 0.0) {
      dir_ = {dc / norm, dr / norm};
    } else {
      dir_ = {0.0, 0.0};
    }
  }

 private:
  std::array<double, 2> dir_ = {0.0, 0.0};
};

}  // namespace

std::unique_ptr<Agent> make_builtin_agent(const std::string& name) {
  if (name == "random") return std::make_unique<RandomAgent>();
  if (name == "stay") return std::make_unique<StayAgent>();
  if (name == "oracle") return std::make_unique<OracleAgent>();
  if (name == "lightdark-seeker") {
    return std::make_unique<LightdarkSeekerAgent>();
  }
  if (name == "gradient-climber") {
    return std::make_unique<GradientClimberAgent>();
  }
  throw InvalidArgument("unknown builtin agent: " + name);
}

const std::vector<std::string>& builtin_agent_names() {
  static const std::vector<std::string> names = {
      "random", "stay", "oracle", "lightdark-seeker", "gradient-climber"};
  return names;
}

}  // namespace percept
