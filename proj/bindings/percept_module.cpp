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

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "percept/core/env.hpp"
#include "percept/core/error.hpp"
#include "percept/harness/agents.hpp"
#include "percept/harness/constants.hpp"
#include "percept/harness/episode.hpp"
#include "percept/harness/metrics.hpp"
#include "percept/harness/registry.hpp"
#include "percept/harness/runner.hpp"

namespace py = pybind11;

namespace {

py::array tensor_to_array(const percept::Tensor& t) {
  std::vector<py::ssize_t> shape(t.shape.begin(), t.shape.end());
  py::array_t<float> arr(shape);
  std::memcpy(arr.mutable_data(), t.data.data(), t.data.size() * sizeof(float));
  return arr;
}

py::dict observation_to_dict(const percept::Observation& obs) {
  py::dict d;
  for (const auto& [name, tensor] : obs) {
    d[py::str(name)] = tensor_to_array(tensor);
  }
  return d;
}

py::dict outcome_to_dict(const percept::StepOutcome& outcome) {
  py::dict metrics;
  for (const auto& [name, value] : outcome.metrics) {
    metrics[py::str(name)] = value;
  }
  py::dict d;
  d["obs"] = observation_to_dict(outcome.observation);
  d["reward"] = outcome.reward;
  d["loss"] = outcome.loss;
  d["terminated"] = outcome.terminated;
  d["truncated"] = outcome.truncated;
  d["metrics"] = metrics;
  d["effective_prediction"] =
      tensor_to_array(percept::Tensor::vec(outcome.effective_prediction));
  return d;
}

py::dict aggregate_to_dict(
    const std::map<std::string, percept::MetricAggregate>& aggregate) {
  py::dict d;
  for (const auto& [name, entry] : aggregate) {
    py::dict item;
    item["value"] = entry.value;
    item["episodes"] = entry.episode_count;
    d[py::str(name)] = item;
  }
  return d;
}

/// Python-facing environment handle; owns one Environment instance.
class PyEnv {
 public:
  PyEnv(const std::string& env_id, const std::string& split,
        const std::string& data_dir) {
    percept::EnvConfig config;
    config.env_id = env_id;
    config.split = split;
    config.data_dir = data_dir;
    env_ = percept::make_env(config);
  }

  py::dict reset(std::uint64_t seed) {
    return observation_to_dict(env_->reset(seed));
  }

  py::dict step(std::vector<float> base, std::vector<float> prediction,
                bool oracle) {
    percept::Action action;
    action.base = std::move(base);
    action.prediction = std::move(prediction);
    action.oracle_prediction = oracle;
    return outcome_to_dict(env_->step(action));
  }

  const percept::TaskSpec& spec() const { return env_->spec(); }
  int step_index() const { return env_->step_index(); }
  bool episode_done() const { return env_->episode_done(); }

 private:
  std::unique_ptr<percept::Environment> env_;
};

py::dict run(const std::string& env_id, const std::string& agent,
             int episodes, std::uint64_t seed, const std::string& split,
             const std::string& data_dir, int jobs,
             const std::string& out_dir) {
  percept::RunConfig config;
  config.env.env_id = env_id;
  config.env.split = split;
  config.env.data_dir = data_dir;
  config.agent = agent;
  config.episodes = episodes;
  config.seed = seed;
  config.jobs = jobs;
  config.out_dir = out_dir;

  std::vector<percept::EpisodeLog> logs;
  {
    py::gil_scoped_release release;
    logs = percept::run_batch(config);
  }
  std::vector<percept::EpisodeMetrics> metrics;
  metrics.reserve(logs.size());
  for (const percept::EpisodeLog& log : logs) {
    metrics.push_back(percept::episode_metrics(log));
  }
  py::dict out;
  out["env"] = env_id;
  out["split"] = split;
  out["agent"] = agent;
  out["episodes"] = episodes;
  out["seed"] = seed;
  out["average"] = aggregate_to_dict(percept::aggregate_metrics(
      metrics, percept::AggregationMode::kAverage));
  out["final"] = aggregate_to_dict(
      percept::aggregate_metrics(metrics, percept::AggregationMode::kFinal));
  return out;
}

py::dict replay(const std::string& log_path, const std::string& data_dir) {
  const percept::EpisodeLog log = percept::load_episode_log(log_path);
  percept::ReplayReport report;
  {
    py::gil_scoped_release release;
    report = percept::replay_episode(log, data_dir);
  }
  py::dict out;
  out["ok"] = report.ok;
  out["detail"] = report.detail;
  return out;
}

py::object constants() {
  const std::string dumped = percept::constants_table().dump();
  return py::module_::import("json").attr("loads")(dumped);
}

}  // namespace

PYBIND11_MODULE(_percept, m) {
  m.doc() = "Active-perception benchmark suite: environments, agents, and "
            "the episode harness.";

  py::register_exception<percept::Error>(m, "Error");

  m.def("environment_ids", &percept::environment_ids,
        "All registered environment ids.");
  m.def("builtin_agent_names",
        [] { return percept::builtin_agent_names(); },
        "Names accepted by the builtin agent factory.");
  m.def("constants", &constants,
        "Machine-readable table of the suite's fixed constants.");

  py::class_<PyEnv>(m, "Env",
                    "One environment instance; reset(seed) then step(base, "
                    "prediction) until episode_done.")
      .def(py::init<const std::string&, const std::string&,
                    const std::string&>(),
           py::arg("env_id"), py::arg("split") = "train",
           py::arg("data_dir") = "")
      .def("reset", &PyEnv::reset, py::arg("seed"),
           "Starts a fresh episode; returns the first observation as a dict "
           "of float32 arrays.")
      .def("step", &PyEnv::step, py::arg("base"), py::arg("prediction"),
           py::arg("oracle") = false,
           "Applies one action; returns obs/reward/loss/terminated/truncated/"
           "metrics/effective_prediction.")
      .def_property_readonly(
          "env_id", [](const PyEnv& e) { return e.spec().env_id; })
      .def_property_readonly(
          "base_action_dim",
          [](const PyEnv& e) { return e.spec().base_action_dim; })
      .def_property_readonly(
          "prediction_kind",
          [](const PyEnv& e) {
            return e.spec().prediction_space.kind ==
                           percept::PredictionSpace::Kind::kClassification
                       ? "classification"
                       : "regression";
          })
      .def_property_readonly(
          "prediction_size",
          [](const PyEnv& e) { return e.spec().prediction_space.size; })
      .def_property_readonly(
          "step_limit", [](const PyEnv& e) { return e.spec().step_limit; })
      .def_property_readonly(
          "reward_bonus", [](const PyEnv& e) { return e.spec().reward_bonus; })
      .def_property_readonly("step_index", &PyEnv::step_index)
      .def_property_readonly("episode_done", &PyEnv::episode_done);

  m.def("run", &run, py::arg("env_id"), py::arg("agent") = "random",
        py::arg("episodes") = 1, py::arg("seed") = 0,
        py::arg("split") = "train", py::arg("data_dir") = "",
        py::arg("jobs") = 1, py::arg("out_dir") = "",
        "Runs episodes with a builtin or exec: agent and returns aggregate "
        "metrics in both average and final modes.");
  m.def("replay", &replay, py::arg("log_path"), py::arg("data_dir") = "",
        "Replays a saved episode log; returns {ok, detail}.");
}
