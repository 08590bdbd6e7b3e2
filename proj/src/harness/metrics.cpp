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

#include "percept/harness/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "percept/core/error.hpp"
#include "percept/core/ops.hpp"

namespace percept {

ClassificationStepMetrics classification_metrics(std::span<const float> logits,
                                                 int label) {
  if (logits.size() < 2) {
    throw InvalidArgument("classification_metrics: need at least 2 logits");
  }
  if (label < 0 || static_cast<std::size_t>(label) >= logits.size()) {
    throw InvalidArgument("classification_metrics: label out of range");
  }

  float max_logit = logits[0];
  for (float v : logits) max_logit = std::max(max_logit, v);
  int max_count = 0;
  std::size_t argmax = 0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    if (logits[i] == max_logit) {
      ++max_count;
      argmax = i;
    }
  }

  ClassificationStepMetrics out;
  out.accuracy =
      (max_count == 1 && argmax == static_cast<std::size_t>(label)) ? 1.0 : 0.0;
  // Softmax as an explicit ratio (max subtracted, double precision) rather
  // than exp(-cross_entropy): uniform logits then give exactly 1/K.
  double denom = 0.0;
  for (float v : logits) {
    denom += std::exp(static_cast<double>(v) - max_logit);
  }
  out.correct_label_prob =
      std::exp(static_cast<double>(logits[static_cast<std::size_t>(label)]) -
               max_logit) /
      denom;
  return out;
}

RegressionStepMetrics regression_metrics(std::span<const float> prediction,
                                         std::span<const float> target) {
  RegressionStepMetrics out;
  out.mse = mse(prediction, target);
  out.euclidean_distance = std::sqrt(out.mse);
  return out;
}

double angular_error(double pred_sin, double pred_cos, double true_theta) {
  if (pred_sin == 0.0 && pred_cos == 0.0) {
    throw InvalidArgument("angular_error: zero (sin, cos) has no orientation");
  }
  double diff = std::atan2(pred_sin, pred_cos) - true_theta;
  // Wrap into (-pi, pi] before taking the magnitude.
  diff = std::remainder(diff, 2.0 * M_PI);
  return std::abs(diff);
}

double linear_error(std::span<const float> pred_xy,
                    std::span<const float> target_xy, double mm_per_unit) {
  if (pred_xy.size() != 2 || target_xy.size() != 2) {
    throw InvalidArgument("linear_error: expected planar (x, y) pairs");
  }
  const double dx = (static_cast<double>(pred_xy[0]) - target_xy[0]);
  const double dy = (static_cast<double>(pred_xy[1]) - target_xy[1]);
  return mm_per_unit * std::hypot(dx, dy);
}

EpisodeClassificationSummary episode_classification_summary(
    const std::vector<double>& per_step_accuracy) {
  EpisodeClassificationSummary out;
  for (std::size_t i = 0; i < per_step_accuracy.size(); ++i) {
    const bool correct = per_step_accuracy[i] != 0.0;
    if (correct && !out.first_correct.has_value()) {
      out.first_correct = static_cast<int>(i);
    }
    if (!correct) {
      out.last_incorrect = static_cast<int>(i);
    }
  }
  return out;
}

std::map<std::string, MetricAggregate> aggregate_metrics(
    const std::vector<EpisodeMetrics>& episodes, AggregationMode mode) {
  if (episodes.empty()) {
    throw InvalidArgument("aggregate_metrics: no episodes");
  }
  std::map<std::string, MetricAggregate> out;
  for (const EpisodeMetrics& episode : episodes) {
    for (const auto& [name, trace] : episode.per_step) {
      if (trace.empty()) continue;
      double value = 0.0;
      if (mode == AggregationMode::kAverage) {
        for (double v : trace) value += v;
        value /= static_cast<double>(trace.size());
      } else {
        value = trace.back();
      }
      MetricAggregate& agg = out[name];
      agg.value += value;
      ++agg.episode_count;
    }
    for (const auto& [name, value] : episode.per_episode) {
      MetricAggregate& agg = out[name];
      agg.value += value;
      ++agg.episode_count;
    }
  }
  for (auto& [name, agg] : out) {
    if (agg.episode_count > 0) {
      agg.value /= static_cast<double>(agg.episode_count);
    }
  }
  return out;
}

}  // namespace percept
