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

#include "percept/harness/episode.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "percept/core/error.hpp"

namespace percept {
namespace {

using nlohmann::json;

std::string fingerprint_hex(std::uint64_t fp) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fp));
  return buf;
}

std::uint64_t fingerprint_from_hex(const std::string& hex) {
  if (hex.size() != 16) throw InvalidArgument("episode log: bad fingerprint");
  return std::stoull(hex, nullptr, 16);
}

json float_array(const std::vector<float>& v) {
  json a = json::array();
  for (float x : v) a.push_back(x);
  return a;
}

std::vector<float> float_array_from(const json& a) {
  if (!a.is_array()) throw InvalidArgument("episode log: expected array");
  std::vector<float> out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(x.get<float>());
  return out;
}

}  // namespace

EpisodeMetrics episode_metrics(const EpisodeLog& log) {
  EpisodeMetrics out;
  for (const StepRecord& step : log.steps) {
    out.per_step["reward"].push_back(step.reward);
    out.per_step["loss"].push_back(step.loss);
    for (const auto& [name, value] : step.metrics) {
      out.per_step[name].push_back(value);
    }
  }
  const auto accuracy = out.per_step.find("accuracy");
  if (accuracy != out.per_step.end() && !accuracy->second.empty()) {
    const EpisodeClassificationSummary summary =
        episode_classification_summary(accuracy->second);
    if (summary.first_correct) {
      out.per_episode["first_correct"] = *summary.first_correct;
    }
    if (summary.last_incorrect) {
      out.per_episode["last_incorrect"] = *summary.last_incorrect;
    }
  }
  return out;
}

std::string to_jsonl(const EpisodeLog& log) {
  std::ostringstream out;
  json header;
  header["type"] = "header";
  header["env"] = log.env_id;
  header["seed"] = log.seed;
  header["split"] = log.split;
  header["version"] = log.version;
  header["reset_obs_fp"] = fingerprint_hex(log.reset_fingerprint);
  out << header.dump() << "\n";
  for (const StepRecord& step : log.steps) {
    json rec;
    rec["type"] = "step";
    rec["base"] = float_array(step.base);
    rec["prediction"] = float_array(step.prediction);
    if (step.oracle) rec["oracle"] = true;
    rec["reward"] = step.reward;
    rec["loss"] = step.loss;
    rec["terminated"] = step.terminated;
    rec["truncated"] = step.truncated;
    rec["obs_fp"] = fingerprint_hex(step.observation_fingerprint);
    json metrics = json::object();
    for (const auto& [name, value] : step.metrics) metrics[name] = value;
    rec["metrics"] = metrics;
    out << rec.dump() << "\n";
  }
  return out.str();
}

EpisodeLog from_jsonl(const std::string& text) {
  EpisodeLog log;
  bool have_header = false;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::parse_error& e) {
      throw InvalidArgument(std::string("episode log: ") + e.what());
    }
    const std::string type = rec.value("type", "");
    if (type == "header") {
      if (have_header) throw InvalidArgument("episode log: duplicate header");
      have_header = true;
      log.env_id = rec.at("env").get<std::string>();
      log.seed = rec.at("seed").get<std::uint64_t>();
      log.split = rec.value("split", "");
      log.version = rec.at("version").get<std::string>();
      log.reset_fingerprint =
          fingerprint_from_hex(rec.at("reset_obs_fp").get<std::string>());
    } else if (type == "step") {
      if (!have_header) throw InvalidArgument("episode log: step before header");
      StepRecord step;
      step.base = float_array_from(rec.at("base"));
      step.prediction = float_array_from(rec.at("prediction"));
      step.oracle = rec.value("oracle", false);
      step.reward = rec.at("reward").get<double>();
      step.loss = rec.at("loss").get<double>();
      step.terminated = rec.at("terminated").get<bool>();
      step.truncated = rec.at("truncated").get<bool>();
      step.observation_fingerprint =
          fingerprint_from_hex(rec.at("obs_fp").get<std::string>());
      for (const auto& [name, value] : rec.at("metrics").items()) {
        step.metrics.emplace_back(name, value.get<double>());
      }
      log.steps.push_back(std::move(step));
    } else {
      throw InvalidArgument("episode log: unknown record type '" + type + "'");
    }
  }
  if (!have_header) throw InvalidArgument("episode log: missing header");
  return log;
}

void save_episode_log(const EpisodeLog& log, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write episode log: " + path);
  out << to_jsonl(log);
}

EpisodeLog load_episode_log(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read episode log: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return from_jsonl(text);
}

}  // namespace percept
