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

#ifndef PERCEPT_HARNESS_REGISTRY_HPP_
#define PERCEPT_HARNESS_REGISTRY_HPP_

#include <memory>
#include <string>
#include <vector>

#include "percept/core/env.hpp"

namespace percept {

/// Selects one environment instance. `split` is "train" or "test".
/// `data_dir` points at optional dataset files; when it is empty, or when the
/// dataset's subdirectory is absent, image-backed environments fall back to
/// deterministic procedural stand-in corpora so everything runs out of the
/// box. A present subdirectory with missing files is an error, not a
/// fallback.
struct EnvConfig {
  std::string env_id;
  std::string split = "train";
  std::string data_dir;
};

/// All registered environment ids, in canonical listing order.
std::vector<std::string> environment_ids();

/// Builds the environment named by `config`. Throws ConfigError for unknown
/// ids, bad splits, or configured-but-incomplete dataset directories.
std::unique_ptr<Environment> make_env(const EnvConfig& config);

}  // namespace percept

#endif  // PERCEPT_HARNESS_REGISTRY_HPP_
