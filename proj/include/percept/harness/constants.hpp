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

#ifndef PERCEPT_HARNESS_CONSTANTS_HPP_
#define PERCEPT_HARNESS_CONSTANTS_HPP_

#include <json.hpp>

namespace percept {

/// Machine-readable table of every benchmark-defining constant (step limits,
/// scales, sensor geometry, corpus and split sizes). The consistency tests
/// assert the live environments against this table with zero tolerance, so
/// a drifting constant fails loudly instead of silently changing the task.
nlohmann::json constants_table();

}  // namespace percept

#endif  // PERCEPT_HARNESS_CONSTANTS_HPP_
