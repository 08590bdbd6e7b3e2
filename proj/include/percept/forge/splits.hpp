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

#ifndef PERCEPT_FORGE_SPLITS_HPP_
#define PERCEPT_FORGE_SPLITS_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace percept {

inline constexpr int kMnist3dClassCount = 10;
inline constexpr int kMnist3dPerClassTrain = 1148;
inline constexpr int kMnist3dPerClassTest = 100;
inline constexpr int kMnist3dPerClassHoldout = 50;
inline constexpr int kMnist3dPerClassPrintedTrain = 50;
inline constexpr int kMnist3dPerClassPrintedTest = 10;
inline constexpr int kMnist3dPerClass =
    kMnist3dPerClassTrain + kMnist3dPerClassTest + kMnist3dPerClassHoldout +
    kMnist3dPerClassPrintedTrain + kMnist3dPerClassPrintedTest;
inline constexpr int kMnist3dTotal = kMnist3dPerClass * kMnist3dClassCount;

enum class Mnist3dSplit {
  kTrain,
  kTest,
  kHoldout,
  kPrintedTrain,
  kPrintedTest,
};

const char* split_name(Mnist3dSplit split);
Mnist3dSplit split_from_name(const std::string& name);

/// Per-object split assignment for the digit-mesh corpus. labels[i] is the
/// class of object i; every class must hold exactly the 1,358 objects the
/// per-split quotas consume, keeping the assignment disjoint and exhaustive.
/// Assignment is a seeded per-class shuffle, deterministic in seed.
std::vector<Mnist3dSplit> split_mnist3d(const std::vector<int>& labels,
                                        std::uint64_t seed);

/// One line per object: "<index> <label> <split>".
std::string to_split_manifest(const std::vector<int>& labels,
                              const std::vector<Mnist3dSplit>& assignment);
void from_split_manifest(const std::string& text, std::vector<int>& labels,
                         std::vector<Mnist3dSplit>& assignment);

}  // namespace percept

#endif  // PERCEPT_FORGE_SPLITS_HPP_
