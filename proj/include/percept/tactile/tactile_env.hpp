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

#ifndef PERCEPT_TACTILE_TACTILE_ENV_HPP_
#define PERCEPT_TACTILE_TACTILE_ENV_HPP_

#include <array>
#include <functional>
#include <memory>
#include <vector>

#include "percept/core/env.hpp"
#include "percept/tactile/depth_render.hpp"

namespace percept {

inline constexpr double kWorkspaceXYMm = 60.0;
inline constexpr double kWorkspaceZMaxMm = 30.0;
inline constexpr std::array<double, 3> kSensorStepScaleMm = {20.0, 20.0, 10.0};
inline constexpr double kContactThresholdMm = 1e-6;
inline constexpr double kTactilePlatformHalfMm = 50.0;
inline constexpr double kPerturbSigmaMm = 1.0;
inline constexpr double kPerturbSigmaDeg = 2.0;
inline constexpr double kVolumeRefMm3 = 20000.0;
inline constexpr int kTactileMnistStepLimit = 16;
inline constexpr int kStarstruckStepLimit = 32;
inline constexpr int kToolboxStepLimit = 64;
inline constexpr int kVolumeStepLimit = 32;

/// Sensor pose update: pose + step_scale * project_to_unit_disk(action),
/// componentwise clamped to the workspace box x, y in [-60, 60], z in
/// [0, 30].
std::array<double, 3> move_sensor(std::array<double, 3> pose,
                                  const std::vector<float>& action);

/// Contact-triggered pose noise: when `contact` and `enabled`, translate by
/// gaussian sigma 1 mm per axis and rotate by gaussian sigma 2 degrees, then
/// re-clamp the position so the footprint stays on the platform. Otherwise
/// the object is returned unchanged and the rng is untouched.
ObjectInstance perturb_on_contact(const ObjectInstance& object, bool contact,
                                  bool enabled, Rng& rng);

/// One object drawn for an episode, with its class label where meaningful.
struct TactileItem {
  std::shared_ptr<const TriangleMesh> mesh;
  std::shared_ptr<const DepthBvh> bvh;
  int label = 0;
};

/// Draws an episode's object; owns corpus/split logic so environments don't.
using TactileItemSource = std::function<TactileItem(Rng& rng)>;

/// Shared machinery of the tactile family: a virtual touch sensor over a
/// 100x100 mm platform. Per step: move the sensor, render the penetration
/// depth image, detect contact (any pixel > 1e-6 mm), perturb the objects if
/// the task allows, then observe {sensor_img, sensor_pos, time_step}.
class TactileEnvBase : public Environment {
 public:
  std::array<double, 3> sensor_pose() const { return sensor_; }
  const std::vector<ObjectInstance>& objects() const { return objects_; }

  /// Workspace box corners map to exactly +-1 per axis.
  static std::array<float, 3> normalize_sensor_pos(std::array<double, 3> pose);

 protected:
  TactileEnvBase(TaskSpec spec, bool perturbation);

  Observation on_reset(Rng& rng) final;
  Observation on_step(const std::vector<float>& base_action, Rng& rng,
                      bool& env_terminated) final;

  /// Rebuilds objects_ and task state for a new episode.
  virtual void reset_scene(Rng& rng) = 0;

  /// Uniform pose with the footprint fully on the platform.
  static void place_uniformly(ObjectInstance& object, Rng& rng);

  Observation observe(const std::vector<double>& depth) const;

  std::vector<ObjectInstance> objects_;

 private:
  bool perturbation_;
  std::array<double, 3> sensor_{};
};

/// Classify which digit solid sits on the platform by touch. 10 classes,
/// 16 steps, perturbation on.
class TactileMnistEnv : public TactileEnvBase {
 public:
  explicit TactileMnistEnv(TactileItemSource source);

 protected:
  void reset_scene(Rng& rng) override;
  int class_target() const override { return label_; }

 private:
  TactileItemSource source_;
  int label_ = 0;
};

/// Count the stars (1-3) among distractor circles and squares; label is
/// star_count - 1. 3 classes, 32 steps, no perturbation; scenes come from
/// the fixed layout corpus restricted to [corpus_begin, corpus_end).
class StarstruckEnv : public TactileEnvBase {
 public:
  StarstruckEnv(int corpus_begin, int corpus_end);

 protected:
  void reset_scene(Rng& rng) override;
  int class_target() const override { return label_; }

 private:
  std::array<std::shared_ptr<const TriangleMesh>, 3> shape_meshes_;
  std::array<std::shared_ptr<const DepthBvh>, 3> shape_bvhs_;
  int corpus_begin_;
  int corpus_end_;
  int label_ = 0;
};

/// Localize a wrench: predict (x/50, y/50, sin theta, cos theta) of its
/// current pose. 64 steps, perturbation on, four seeded size variants.
class ToolboxEnv : public TactileEnvBase {
 public:
  ToolboxEnv();

 protected:
  void reset_scene(Rng& rng) override;
  std::vector<float> regression_target() const override;
  void append_extra_metrics(
      const std::vector<float>& prediction,
      std::vector<std::pair<std::string, double>>& metrics) const override;

 private:
  std::array<std::shared_ptr<const TriangleMesh>, 4> variant_meshes_;
  std::array<std::shared_ptr<const DepthBvh>, 4> variant_bvhs_;
};

/// Estimate the digit solid's volume as a fraction of 20 cm^3. Scalar
/// regression, 32 steps, perturbation on.
class TactileVolumeEnv : public TactileEnvBase {
 public:
  explicit TactileVolumeEnv(TactileItemSource source);

  double object_volume_mm3() const { return volume_mm3_; }

 protected:
  void reset_scene(Rng& rng) override;
  std::vector<float> regression_target() const override;
  void append_extra_metrics(
      const std::vector<float>& prediction,
      std::vector<std::pair<std::string, double>>& metrics) const override;

 private:
  TactileItemSource source_;
  double volume_mm3_ = 0.0;
  float v_norm_ = 0.0f;
};

}  // namespace percept

#endif  // PERCEPT_TACTILE_TACTILE_ENV_HPP_
