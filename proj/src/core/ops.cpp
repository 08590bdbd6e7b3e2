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

#include "percept/core/ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "percept/core/error.hpp"

namespace percept {
namespace {

template <typename T>
double norm_impl(std::span<const T> v) {
  double s = 0.0;
  for (T x : v) s += static_cast<double>(x) * static_cast<double>(x);
  return std::sqrt(s);
}

std::vector<double> project_impl(std::vector<double> v) {
  for (double x : v) {
    if (!std::isfinite(x)) throw InvalidArgument("project_to_unit_disk: non-finite input");
  }
  const double n = l2_norm(std::span<const double>(v));
  if (n > 1.0) {
    for (double& x : v) x /= n;
  }
  return v;
}

}  // namespace

double l2_norm(std::span<const double> v) { return norm_impl(v); }
double l2_norm(std::span<const float> v) { return norm_impl(v); }

std::vector<double> project_to_unit_disk(std::span<const double> v) {
  return project_impl(std::vector<double>(v.begin(), v.end()));
}

std::vector<double> project_to_unit_disk(std::span<const float> v) {
  return project_impl(std::vector<double>(v.begin(), v.end()));
}

double cross_entropy(std::span<const float> logits, int label) {
  if (logits.size() < 2) throw InvalidArgument("cross_entropy: need at least 2 classes");
  if (label < 0 || label >= static_cast<int>(logits.size()))
    throw InvalidArgument("cross_entropy: label out of range");
  double max_logit = -std::numeric_limits<double>::infinity();
  for (float l : logits) {
    if (!std::isfinite(l)) throw InvalidArgument("cross_entropy: non-finite logit");
    max_logit = std::max(max_logit, static_cast<double>(l));
  }
  double sum = 0.0;
  for (float l : logits) sum += std::exp(static_cast<double>(l) - max_logit);
  return max_logit + std::log(sum) - static_cast<double>(logits[label]);
}

double mse(std::span<const float> pred, std::span<const float> target) {
  if (pred.size() != target.size()) throw InvalidArgument("mse: length mismatch");
  if (pred.empty()) throw InvalidArgument("mse: empty input");
  double s = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const double d = static_cast<double>(pred[i]) - static_cast<double>(target[i]);
    s += d * d;
  }
  return s / static_cast<double>(pred.size());
}

double step_reward(std::span<const float> base_action, double loss, double bonus) {
  return bonus - kActionRegularization * l2_norm(base_action) - loss;
}

double normalize_time(int step_index, int step_limit) {
  if (step_limit < 1) throw InvalidArgument("normalize_time: step_limit must be >= 1");
  if (step_index < 0 || step_index > step_limit)
    throw InvalidArgument("normalize_time: step_index out of range");
  return 2.0 * static_cast<double>(step_index) / static_cast<double>(step_limit) - 1.0;
}

}  // namespace percept
