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

#include "percept/tactile/tactile_env.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "percept/core/error.hpp"
#include "percept/core/ops.hpp"
#include "percept/forge/extrude.hpp"
#include "percept/forge/starstruck.hpp"
#include "percept/forge/toolbox.hpp"
#include "percept/harness/metrics.hpp"

namespace percept {
namespace {

constexpr double kPi = 3.14159265358979323846;

TaskSpec tactile_task(const char* env_id, PredictionSpace space,
                      int step_limit) {
  TaskSpec spec;
  spec.env_id = env_id;
  spec.base_action_dim = 3;
  spec.prediction_space = space;
  spec.step_limit = step_limit;
  spec.loss_kind = space.kind == PredictionSpace::Kind::kClassification
                       ? LossKind::kCrossEntropy
                       : LossKind::kMeanSquaredError;
  return spec;
}

double platform_margin(double circumradius) {
  return std::max(0.0, kTactilePlatformHalfMm - circumradius);
}

}  // namespace

std::array<double, 3> move_sensor(std::array<double, 3> pose,
                                  const std::vector<float>& action) {
  const std::vector<double> delta = project_to_unit_disk(action);
  for (int i = 0; i < 3; ++i) pose[i] += kSensorStepScaleMm[i] * delta[i];
  pose[0] = std::clamp(pose[0], -kWorkspaceXYMm, kWorkspaceXYMm);
  pose[1] = std::clamp(pose[1], -kWorkspaceXYMm, kWorkspaceXYMm);
  pose[2] = std::clamp(pose[2], 0.0, kWorkspaceZMaxMm);
  return pose;
}

ObjectInstance perturb_on_contact(const ObjectInstance& object, bool contact,
                                  bool enabled, Rng& rng) {
  if (!contact || !enabled) return object;
  ObjectInstance out = object;
  out.x += kPerturbSigmaMm * rng.gaussian();
  out.y += kPerturbSigmaMm * rng.gaussian();
  out.theta += kPerturbSigmaDeg * kPi / 180.0 * rng.gaussian();
  const double margin = platform_margin(out.circumradius);
  out.x = std::clamp(out.x, -margin, margin);
  out.y = std::clamp(out.y, -margin, margin);
  return out;
}

TactileEnvBase::TactileEnvBase(TaskSpec spec, bool perturbation)
    : Environment(std::move(spec)), perturbation_(perturbation) {}

std::array<float, 3> TactileEnvBase::normalize_sensor_pos(
    std::array<double, 3> pose) {
  return {static_cast<float>(pose[0] / kWorkspaceXYMm),
          static_cast<float>(pose[1] / kWorkspaceXYMm),
          static_cast<float>(2.0 * pose[2] / kWorkspaceZMaxMm - 1.0)};
}

void TactileEnvBase::place_uniformly(ObjectInstance& object, Rng& rng) {
  const double margin = platform_margin(object.circumradius);
  object.x = rng.uniform(-margin, margin);
  object.y = rng.uniform(-margin, margin);
  object.theta = rng.uniform(0.0, 2.0 * kPi);
}

Observation TactileEnvBase::observe(const std::vector<double>& depth) const {
  Observation obs;
  obs["sensor_img"] = depth_to_obs(depth);
  const std::array<float, 3> pos = normalize_sensor_pos(sensor_);
  obs["sensor_pos"] = Tensor::vec({pos[0], pos[1], pos[2]});
  obs["time_step"] = Tensor::scalar(
      static_cast<float>(normalize_time(step_index(), spec().step_limit)));
  return obs;
}

Observation TactileEnvBase::on_reset(Rng& rng) {
  objects_.clear();
  reset_scene(rng);
  sensor_[0] = rng.uniform(-kWorkspaceXYMm, kWorkspaceXYMm);
  sensor_[1] = rng.uniform(-kWorkspaceXYMm, kWorkspaceXYMm);
  sensor_[2] = kWorkspaceZMaxMm;
  return observe(render_depth(objects_, sensor_));
}

Observation TactileEnvBase::on_step(const std::vector<float>& base_action,
                                    Rng& rng, bool& /*env_terminated*/) {
  sensor_ = move_sensor(sensor_, base_action);
  const std::vector<double> depth = render_depth(objects_, sensor_);
  bool contact = false;
  for (double d : depth) {
    if (d > kContactThresholdMm) {
      contact = true;
      break;
    }
  }
  for (auto& object : objects_) {
    object = perturb_on_contact(object, contact, perturbation_, rng);
  }
  return observe(depth);
}

TactileMnistEnv::TactileMnistEnv(TactileItemSource source)
    : TactileEnvBase(tactile_task("TactileMNIST",
                                  PredictionSpace::classification(10),
                                  kTactileMnistStepLimit),
                     /*perturbation=*/true),
      source_(std::move(source)) {
  if (!source_) throw InvalidArgument("TactileMNIST: null item source");
}

void TactileMnistEnv::reset_scene(Rng& rng) {
  const TactileItem item = source_(rng);
  label_ = item.label;
  ObjectInstance object = make_object(item.mesh, item.bvh, 0.0, 0.0, 0.0);
  place_uniformly(object, rng);
  objects_.push_back(std::move(object));
}

StarstruckEnv::StarstruckEnv(int corpus_begin, int corpus_end)
    : TactileEnvBase(tactile_task("Starstruck",
                                  PredictionSpace::classification(3),
                                  kStarstruckStepLimit),
                     /*perturbation=*/false),
      corpus_begin_(corpus_begin),
      corpus_end_(corpus_end) {
  if (corpus_begin_ < 0 || corpus_end_ <= corpus_begin_ ||
      corpus_end_ > kStarstruckCorpusSize) {
    throw InvalidArgument("Starstruck: bad corpus range");
  }
  const ShapeKind kinds[3] = {ShapeKind::kStar, ShapeKind::kCircle,
                              ShapeKind::kSquare};
  for (int i = 0; i < 3; ++i) {
    auto mesh = std::make_shared<TriangleMesh>(
        extrude_polygon(shape_outline(kinds[i]), kShapeHeightMm));
    shape_bvhs_[i] = std::make_shared<DepthBvh>(*mesh);
    shape_meshes_[i] = std::move(mesh);
  }
}

void StarstruckEnv::reset_scene(Rng& rng) {
  const int index =
      corpus_begin_ + rng.uniform_int(corpus_end_ - corpus_begin_);
  const SceneLayout layout =
      generate_starstruck_scene(static_cast<std::uint64_t>(index));
  label_ = layout.star_count - 1;
  for (const SceneItem& item : layout.items) {
    const int k = static_cast<int>(item.shape);
    objects_.push_back(make_object(shape_meshes_[k], shape_bvhs_[k], item.x,
                                   item.y, item.theta));
  }
}

ToolboxEnv::ToolboxEnv()
    : TactileEnvBase(tactile_task("Toolbox", PredictionSpace::regression(4),
                                  kToolboxStepLimit),
                     /*perturbation=*/true) {
  for (int v = 0; v < kToolboxVariantCount; ++v) {
    auto mesh = std::make_shared<TriangleMesh>(toolbox_tool_mesh(v));
    variant_bvhs_[v] = std::make_shared<DepthBvh>(*mesh);
    variant_meshes_[v] = std::move(mesh);
  }
}

void ToolboxEnv::reset_scene(Rng& rng) {
  const int v = rng.uniform_int(kToolboxVariantCount);
  ObjectInstance object =
      make_object(variant_meshes_[v], variant_bvhs_[v], 0.0, 0.0, 0.0);
  place_uniformly(object, rng);
  objects_.push_back(std::move(object));
}

std::vector<float> ToolboxEnv::regression_target() const {
  const ObjectInstance& tool = objects_.front();
  return {static_cast<float>(tool.x / kTactilePlatformHalfMm),
          static_cast<float>(tool.y / kTactilePlatformHalfMm),
          static_cast<float>(std::sin(tool.theta)),
          static_cast<float>(std::cos(tool.theta))};
}

void ToolboxEnv::append_extra_metrics(
    const std::vector<float>& prediction,
    std::vector<std::pair<std::string, double>>& metrics) const {
  const std::vector<float> target = regression_target();
  const std::array<float, 2> pred_xy = {prediction[0], prediction[1]};
  const std::array<float, 2> target_xy = {target[0], target[1]};
  metrics.emplace_back(
      "linear_error",
      linear_error(pred_xy, target_xy, kTactilePlatformHalfMm));
  // A zero (sin, cos) prediction carries no orientation; the angular metric
  // is undefined for that step and is omitted rather than guessed.
  if (prediction[2] != 0.0f || prediction[3] != 0.0f) {
    metrics.emplace_back(
        "angular_error",
        angular_error(prediction[2], prediction[3], objects_.front().theta));
  }
}

TactileVolumeEnv::TactileVolumeEnv(TactileItemSource source)
    : TactileEnvBase(tactile_task("TactileMNISTVolume",
                                  PredictionSpace::regression(1),
                                  kVolumeStepLimit),
                     /*perturbation=*/true),
      source_(std::move(source)) {
  if (!source_) throw InvalidArgument("TactileMNISTVolume: null item source");
}

void TactileVolumeEnv::reset_scene(Rng& rng) {
  const TactileItem item = source_(rng);
  volume_mm3_ = mesh_volume(*item.mesh);
  v_norm_ = static_cast<float>(volume_mm3_ / kVolumeRefMm3);
  ObjectInstance object = make_object(item.mesh, item.bvh, 0.0, 0.0, 0.0);
  place_uniformly(object, rng);
  objects_.push_back(std::move(object));
}

std::vector<float> TactileVolumeEnv::regression_target() const {
  return {v_norm_};
}

void TactileVolumeEnv::append_extra_metrics(
    const std::vector<float>& prediction,
    std::vector<std::pair<std::string, double>>& metrics) const {
  const double predicted_cm3 =
      static_cast<double>(prediction[0]) * kVolumeRefMm3 / 1000.0;
  const double actual_cm3 = volume_mm3_ / 1000.0;
  metrics.emplace_back("volume_error_cm3",
                       std::abs(predicted_cm3 - actual_cm3));
  metrics.emplace_back("volume_ratio", predicted_cm3 / actual_cm3);
}

}  // namespace percept
