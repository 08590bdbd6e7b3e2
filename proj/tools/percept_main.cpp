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

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "percept/core/error.hpp"
#include "percept/forge/digit_mesh.hpp"
#include "percept/forge/extrude.hpp"
#include "percept/forge/mesh.hpp"
#include "percept/forge/splits.hpp"
#include "percept/forge/starstruck.hpp"
#include "percept/forge/toolbox.hpp"
#include "percept/harness/episode.hpp"
#include "percept/harness/metrics.hpp"
#include "percept/harness/registry.hpp"
#include "percept/harness/runner.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw percept::ConfigError("cannot write " + path.string());
  out << content;
  if (!out) throw percept::ConfigError("write failed: " + path.string());
}

json aggregate_to_json(
    const std::map<std::string, percept::MetricAggregate>& aggregate) {
  json j = json::object();
  for (const auto& [name, entry] : aggregate) {
    j[name] = {{"value", entry.value}, {"episodes", entry.episode_count}};
  }
  return j;
}

int do_run(const percept::RunConfig& config) {
  const std::vector<percept::EpisodeLog> logs = percept::run_batch(config);
  std::vector<percept::EpisodeMetrics> metrics;
  metrics.reserve(logs.size());
  for (const percept::EpisodeLog& log : logs) {
    metrics.push_back(percept::episode_metrics(log));
  }
  json out;
  out["env"] = config.env.env_id;
  out["split"] = config.env.split;
  out["agent"] = config.agent;
  out["episodes"] = config.episodes;
  out["seed"] = config.seed;
  out["average"] = aggregate_to_json(
      percept::aggregate_metrics(metrics, percept::AggregationMode::kAverage));
  out["final"] = aggregate_to_json(
      percept::aggregate_metrics(metrics, percept::AggregationMode::kFinal));
  std::cout << out.dump(2) << "\n";
  return 0;
}

int gen_mnist3d(const fs::path& dir, int count, std::uint64_t seed) {
  if (count < 0 || count > percept::kMnist3dTotal) {
    throw percept::ConfigError("count out of range for mnist3d");
  }
  std::vector<int> labels(percept::kMnist3dTotal);
  for (int i = 0; i < percept::kMnist3dTotal; ++i) {
    labels[i] = i / percept::kMnist3dPerClass;
  }
  const std::vector<percept::Mnist3dSplit> assignment =
      percept::split_mnist3d(labels, 0);
  write_file(dir / "splits.manifest",
             percept::to_split_manifest(labels, assignment));
  // Emitted objects cycle through the classes so any count gives variety.
  for (int i = 0; i < count; ++i) {
    const int digit = i % percept::kMnist3dClassCount;
    const int instance = i / percept::kMnist3dClassCount;
    const int object = digit * percept::kMnist3dPerClass + instance;
    const percept::BinaryImage bitmap =
        percept::synth_digit_bitmap(digit, seed + object);
    const percept::TriangleMesh mesh = percept::digit_to_mesh(bitmap);
    char name[32];
    std::snprintf(name, sizeof(name), "digit_%d_%04d", digit, instance);
    write_file(dir / (std::string(name) + ".pbm"), percept::to_pbm(bitmap));
    write_file(dir / (std::string(name) + ".obj"), percept::to_obj(mesh));
  }
  return 0;
}

int gen_starstruck(const fs::path& dir, int count, std::uint64_t seed) {
  if (count < 0) throw percept::ConfigError("count must be >= 0");
  const std::pair<percept::ShapeKind, const char*> shapes[] = {
      {percept::ShapeKind::kStar, "star"},
      {percept::ShapeKind::kCircle, "circle"},
      {percept::ShapeKind::kSquare, "square"},
  };
  for (const auto& [kind, name] : shapes) {
    const percept::TriangleMesh mesh = percept::extrude_polygon(
        percept::shape_outline(kind), percept::kShapeHeightMm);
    write_file(dir / (std::string(name) + ".obj"), percept::to_obj(mesh));
  }
  for (int i = 0; i < count; ++i) {
    const percept::SceneLayout scene =
        percept::generate_starstruck_scene(seed + i);
    char name[32];
    std::snprintf(name, sizeof(name), "scene_%06d.manifest", i);
    write_file(dir / name, percept::to_manifest(scene));
  }
  return 0;
}

int gen_toolbox(const fs::path& dir) {
  for (int v = 0; v < percept::kToolboxVariantCount; ++v) {
    write_file(dir / ("tool_" + std::to_string(v) + ".obj"),
               percept::to_obj(percept::toolbox_tool_mesh(v)));
  }
  return 0;
}

int do_report(const std::string& logs_dir, const std::string& mode_name) {
  std::vector<fs::path> files;
  if (!fs::is_directory(logs_dir)) {
    throw percept::ConfigError("not a directory: " + logs_dir);
  }
  for (const fs::directory_entry& entry : fs::directory_iterator(logs_dir)) {
    if (entry.path().extension() == ".jsonl") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    throw percept::ConfigError("no .jsonl episode logs in " + logs_dir);
  }
  std::vector<percept::EpisodeMetrics> metrics;
  metrics.reserve(files.size());
  for (const fs::path& file : files) {
    metrics.push_back(
        percept::episode_metrics(percept::load_episode_log(file.string())));
  }
  const percept::AggregationMode mode =
      mode_name == "final" ? percept::AggregationMode::kFinal
                           : percept::AggregationMode::kAverage;
  json out;
  out["mode"] = mode_name;
  out["episodes"] = static_cast<int>(metrics.size());
  out["metrics"] = aggregate_to_json(percept::aggregate_metrics(metrics, mode));
  std::cout << out.dump(2) << "\n";
  return 0;
}

int do_replay(const std::string& log_path, const std::string& data_dir) {
  const percept::EpisodeLog log = percept::load_episode_log(log_path);
  const percept::ReplayReport report = percept::replay_episode(log, data_dir);
  if (report.ok) {
    std::cout << "replay ok: " << log.env_id << " seed " << log.seed << ", "
              << log.steps.size() << " steps\n";
    return 0;
  }
  std::cerr << "replay mismatch: " << report.detail << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Active-perception benchmark harness"};
  app.require_subcommand(1);

  percept::RunConfig run_config;
  CLI::App* run = app.add_subcommand("run", "Play episodes and report metrics");
  run->add_option("--env", run_config.env.env_id, "Environment id")
      ->required();
  run->add_option("--agent", run_config.agent,
                  "Builtin agent name or exec:COMMAND")
      ->capture_default_str();
  run->add_option("--episodes", run_config.episodes, "Episode count")
      ->capture_default_str();
  run->add_option("--seed", run_config.seed, "Base seed; episode i adds i")
      ->capture_default_str();
  run->add_option("--split", run_config.env.split, "Corpus split")
      ->check(CLI::IsMember({"train", "test"}))
      ->capture_default_str();
  run->add_option("--out", run_config.out_dir,
                  "Write one episode log per episode here");
  run->add_option("--jobs", run_config.jobs, "Parallel worker lanes")
      ->capture_default_str();
  run->add_option("--data-dir", run_config.env.data_dir,
                  "Dataset root (omit to use procedural stand-ins)");

  std::string gen_kind;
  std::string gen_out;
  int gen_count = -1;
  std::uint64_t gen_seed = 0;
  CLI::App* gen = app.add_subcommand("gen-assets", "Write procedural assets");
  gen->add_option("--kind", gen_kind, "Asset family")
      ->required()
      ->check(CLI::IsMember({"mnist3d", "starstruck", "toolbox"}));
  gen->add_option("--out", gen_out, "Output directory")->required();
  gen->add_option("--count", gen_count,
                  "Objects/scenes to emit (default: 20 digits, 10 scenes)");
  gen->add_option("--seed", gen_seed, "Base seed")->capture_default_str();

  std::string report_logs;
  std::string report_mode = "average";
  CLI::App* report = app.add_subcommand("report", "Aggregate saved logs");
  report->add_option("--logs", report_logs, "Directory of episode logs")
      ->required();
  report->add_option("--mode", report_mode, "Aggregation mode")
      ->check(CLI::IsMember({"average", "final"}))
      ->capture_default_str();

  std::string replay_log;
  std::string replay_data_dir;
  CLI::App* replay =
      app.add_subcommand("replay", "Re-run a log and verify it bit-for-bit");
  replay->add_option("--log", replay_log, "Episode log file")->required();
  replay->add_option("--data-dir", replay_data_dir, "Dataset root");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (run->parsed()) return do_run(run_config);
    if (gen->parsed()) {
      fs::create_directories(gen_out);
      if (gen_kind == "mnist3d") {
        return gen_mnist3d(gen_out, gen_count < 0 ? 20 : gen_count, gen_seed);
      }
      if (gen_kind == "starstruck") {
        return gen_starstruck(gen_out, gen_count < 0 ? 10 : gen_count,
                              gen_seed);
      }
      return gen_toolbox(gen_out);
    }
    if (report->parsed()) return do_report(report_logs, report_mode);
    if (replay->parsed()) return do_replay(replay_log, replay_data_dir);
  } catch (const percept::DecodeError& e) {
    std::cerr << "protocol error: " << e.what() << "\n";
    return 2;
  } catch (const percept::ProtocolError& e) {
    std::cerr << "protocol error: " << e.what() << "\n";
    return 2;
  } catch (const percept::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 3;
  } catch (const percept::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
