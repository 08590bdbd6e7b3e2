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

#ifndef PERCEPT_HARNESS_METRICS_HPP_
#define PERCEPT_HARNESS_METRICS_HPP_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace percept {

struct ClassificationStepMetrics {
  double accuracy = 0.0;  // 1 iff argmax is unique and equals the label.
  double correct_label_prob = 0.0;
};

/// Per-step classification quality. Ties at the argmax count as incorrect, so
/// uniform logits always score accuracy 0. correct_label_prob is the softmax
/// probability assigned to the true label.
ClassificationStepMetrics classification_metrics(std::span<const float> logits,
                                                 int label);

struct RegressionStepMetrics {
  double mse = 0.0;
  double euclidean_distance = 0.0;  // sqrt(mse)
};

RegressionStepMetrics regression_metrics(std::span<const float> prediction,
                                         std::span<const float> target);

/// Absolute angular gap in [0, pi] between a predicted (sin, cos) pair and a
/// ground-truth angle in radians. The prediction need not be normalized; it
/// is read back through atan2. Throws InvalidArgument when both components
/// are zero (no orientation).
double angular_error(double pred_sin, double pred_cos, double true_theta);

/// Planar gap in millimetres between predicted and true positions given in
/// normalized units, scaled by mm_per_unit.
double linear_error(std::span<const float> pred_xy,
                    std::span<const float> target_xy, double mm_per_unit);

struct EpisodeClassificationSummary {
  std::optional<int> first_correct;   // absent if no step was correct
  std::optional<int> last_incorrect;  // absent if every step was correct
};

/// Condenses a per-step accuracy sequence (values 0/1) into the step index of
/// the first correct and the last incorrect prediction.
EpisodeClassificationSummary episode_classification_summary(
    const std::vector<double>& per_step_accuracy);

/// Everything measured during one episode: per-step metric traces plus
/// episode-level scalars that may be undefined (e.g. first_correct when the
/// agent was never right).
struct EpisodeMetrics {
  std::map<std::string, std::vector<double>> per_step;
  std::map<std::string, double> per_episode;
};

enum class AggregationMode {
  kAverage,  // per-episode mean over steps, then mean over episodes
  kFinal,    // last-step value, mean over episodes
};

struct MetricAggregate {
  double value = 0.0;
  /// Episodes that contributed; below episodes.size() for metrics that are
  /// undefined in some episodes.
  int episode_count = 0;
};

/// Aggregates per-step metrics with the selected mode and per-episode scalars
/// by averaging over the episodes where they are defined.
std::map<std::string, MetricAggregate> aggregate_metrics(
    const std::vector<EpisodeMetrics>& episodes, AggregationMode mode);

}  // namespace percept

#endif  // PERCEPT_HARNESS_METRICS_HPP_
