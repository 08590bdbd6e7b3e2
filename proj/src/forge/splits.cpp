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

#include "percept/forge/splits.hpp"

#include <array>
#include <cstddef>
#include <sstream>

#include "percept/core/error.hpp"
#include "percept/core/rng.hpp"

namespace percept {

const char* split_name(Mnist3dSplit split) {
  switch (split) {
    case Mnist3dSplit::kTrain:
      return "train";
    case Mnist3dSplit::kTest:
      return "test";
    case Mnist3dSplit::kHoldout:
      return "holdout";
    case Mnist3dSplit::kPrintedTrain:
      return "printed_train";
    case Mnist3dSplit::kPrintedTest:
      return "printed_test";
  }
  return "train";
}

Mnist3dSplit split_from_name(const std::string& name) {
  if (name == "train") return Mnist3dSplit::kTrain;
  if (name == "test") return Mnist3dSplit::kTest;
  if (name == "holdout") return Mnist3dSplit::kHoldout;
  if (name == "printed_train") return Mnist3dSplit::kPrintedTrain;
  if (name == "printed_test") return Mnist3dSplit::kPrintedTest;
  throw InvalidArgument("unknown split name: " + name);
}

std::vector<Mnist3dSplit> split_mnist3d(const std::vector<int>& labels,
                                        std::uint64_t seed) {
  std::array<std::vector<int>, kMnist3dClassCount> by_class;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int label = labels[i];
    if (label < 0 || label >= kMnist3dClassCount) {
      throw InvalidArgument("split_mnist3d: label out of range");
    }
    by_class[static_cast<std::size_t>(label)].push_back(static_cast<int>(i));
  }
  for (const auto& members : by_class) {
    if (static_cast<int>(members.size()) != kMnist3dPerClass) {
      throw InvalidArgument(
          "split_mnist3d: every class needs exactly " +
          std::to_string(kMnist3dPerClass) + " objects, got " +
          std::to_string(members.size()));
    }
  }

  const Rng base(seed);
  std::vector<Mnist3dSplit> assignment(labels.size(), Mnist3dSplit::kTrain);
  constexpr std::array<std::pair<Mnist3dSplit, int>, 5> quotas = {{
      {Mnist3dSplit::kTrain, kMnist3dPerClassTrain},
      {Mnist3dSplit::kTest, kMnist3dPerClassTest},
      {Mnist3dSplit::kHoldout, kMnist3dPerClassHoldout},
      {Mnist3dSplit::kPrintedTrain, kMnist3dPerClassPrintedTrain},
      {Mnist3dSplit::kPrintedTest, kMnist3dPerClassPrintedTest},
  }};
  for (int label = 0; label < kMnist3dClassCount; ++label) {
    auto& members = by_class[static_cast<std::size_t>(label)];
    Rng rng = base.split(static_cast<std::uint64_t>(label));
    for (std::size_t i = members.size(); i > 1; --i) {
      const std::size_t j =
          static_cast<std::size_t>(rng.uniform_int(static_cast<int>(i)));
      std::swap(members[i - 1], members[j]);
    }
    std::size_t cursor = 0;
    for (const auto& [split, quota] : quotas) {
      for (int n = 0; n < quota; ++n) {
        assignment[static_cast<std::size_t>(members[cursor++])] = split;
      }
    }
  }
  return assignment;
}

std::string to_split_manifest(const std::vector<int>& labels,
                              const std::vector<Mnist3dSplit>& assignment) {
  if (labels.size() != assignment.size()) {
    throw InvalidArgument("to_split_manifest: size mismatch");
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out << i << " " << labels[i] << " " << split_name(assignment[i]) << "\n";
  }
  return out.str();
}

void from_split_manifest(const std::string& text, std::vector<int>& labels,
                         std::vector<Mnist3dSplit>& assignment) {
  labels.clear();
  assignment.clear();
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::size_t index = 0;
    int label = 0;
    std::string name;
    if (!(fields >> index >> label >> name)) {
      throw InvalidArgument("split manifest: malformed line " +
                            std::to_string(line_no));
    }
    if (index != labels.size()) {
      throw InvalidArgument("split manifest: non-sequential index at line " +
                            std::to_string(line_no));
    }
    labels.push_back(label);
    assignment.push_back(split_from_name(name));
  }
}

}  // namespace percept
