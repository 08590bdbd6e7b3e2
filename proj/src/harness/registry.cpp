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

#include "percept/harness/registry.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>

#include "percept/core/error.hpp"
#include "percept/forge/digit_mesh.hpp"
#include "percept/forge/splits.hpp"
#include "percept/forge/starstruck.hpp"
#include "percept/glimpse/circle_square.hpp"
#include "percept/glimpse/glimpse_env.hpp"
#include "percept/glimpse/image_corpus.hpp"
#include "percept/loc/lidar_env.hpp"
#include "percept/loc/lightdark.hpp"
#include "percept/tactile/depth_render.hpp"
#include "percept/tactile/tactile_env.hpp"

namespace percept {
namespace {

namespace fs = std::filesystem;

constexpr int kSmallGlimpse = 5;
constexpr int kLargeGlimpse = 10;
// Stand-in corpus sizes and seeds, one seed pair per image family.
constexpr int kSyntheticTrainCount = 1024;
constexpr int kSyntheticTestCount = 256;
constexpr int kSyntheticTinTrainCount = 1000;
constexpr int kSyntheticTinTestCount = 400;
constexpr std::uint64_t kMnist3dSplitSeed = 0;

bool parse_split(const std::string& split) {
  if (split == "train") return false;
  if (split == "test") return true;
  throw ConfigError("unknown split '" + split + "' (want train or test)");
}

void require_file(const fs::path& path) {
  if (!fs::exists(path)) {
    throw ConfigError("dataset file missing: " + path.string());
  }
}

/// Digit-mesh object corpus: per-object labels, optional source images, and
/// the train/test index pools. Meshes are built per episode, never stored.
struct Mnist3dCorpus {
  bool synthetic = true;
  std::vector<int> labels;
  std::vector<Tensor> images;  // aligned with labels; empty when synthetic
  std::vector<int> train_indices;
  std::vector<int> test_indices;
};

std::shared_ptr<const ImageCorpus> cached_corpus(
    const std::string& key, const std::function<ImageCorpus()>& build) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const ImageCorpus>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::make_shared<const ImageCorpus>(build()))
             .first;
  }
  return it->second;
}

std::shared_ptr<const ImageCorpus> circle_square_split(bool test) {
  const std::string key = std::string("circlesquare|") + (test ? "test" : "train");
  return cached_corpus(key, [test] {
    const ImageCorpus full = circle_square_corpus();
    const int begin = test ? kCircleSquareCorpusSize - kCircleSquareTestSize : 0;
    const int end = test ? kCircleSquareCorpusSize
                         : kCircleSquareCorpusSize - kCircleSquareTestSize;
    std::vector<int> indices(end - begin);
    std::iota(indices.begin(), indices.end(), begin);
    return corpus_subset(full, indices);
  });
}

std::shared_ptr<const ImageCorpus> mnist_split(bool test,
                                               const std::string& data_dir) {
  const std::string key =
      std::string("mnist|") + (test ? "test" : "train") + "|" + data_dir;
  return cached_corpus(key, [test, &data_dir]() -> ImageCorpus {
    const fs::path dir = fs::path(data_dir) / "mnist";
    if (!data_dir.empty() && fs::is_directory(dir)) {
      const std::string stem = test ? "t10k" : "train";
      const fs::path images = dir / (stem + "-images-idx3-ubyte");
      const fs::path labels = dir / (stem + "-labels-idx1-ubyte");
      require_file(images);
      require_file(labels);
      return load_idx(images.string(), labels.string());
    }
    return synthetic_corpus(28, 28, 1, 10,
                            test ? kSyntheticTestCount : kSyntheticTrainCount,
                            test ? 2 : 1);
  });
}

std::shared_ptr<const ImageCorpus> cifar10_split(bool test,
                                                 const std::string& data_dir) {
  const std::string key =
      std::string("cifar10|") + (test ? "test" : "train") + "|" + data_dir;
  return cached_corpus(key, [test, &data_dir]() -> ImageCorpus {
    const fs::path dir = fs::path(data_dir) / "cifar10";
    if (!data_dir.empty() && fs::is_directory(dir)) {
      std::vector<std::string> batches;
      if (test) {
        batches.push_back((dir / "test_batch.bin").string());
      } else {
        for (int i = 1; i <= 5; ++i) {
          batches.push_back(
              (dir / ("data_batch_" + std::to_string(i) + ".bin")).string());
        }
      }
      for (const std::string& path : batches) require_file(path);
      return load_cifar10(batches);
    }
    return synthetic_corpus(32, 32, 3, 10,
                            test ? kSyntheticTestCount : kSyntheticTrainCount,
                            test ? 4 : 3);
  });
}

std::shared_ptr<const ImageCorpus> tinyimagenet_split(
    bool test, const std::string& data_dir) {
  const std::string key =
      std::string("tinyimagenet|") + (test ? "test" : "train") + "|" + data_dir;
  return cached_corpus(key, [test, &data_dir]() -> ImageCorpus {
    const fs::path dir = fs::path(data_dir) / "tinyimagenet";
    if (!data_dir.empty() && fs::is_directory(dir)) {
      const fs::path manifest =
          dir / (std::string(test ? "test" : "train") + ".manifest");
      require_file(manifest);
      return load_corpus_manifest(manifest.string());
    }
    return synthetic_corpus(
        64, 64, 3, 200,
        test ? kSyntheticTinTestCount : kSyntheticTinTrainCount,
        test ? 6 : 5);
  });
}

std::shared_ptr<const Mnist3dCorpus> mnist3d_corpus(
    const std::string& data_dir) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const Mnist3dCorpus>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(data_dir);
  if (it != cache.end()) return it->second;

  auto corpus = std::make_shared<Mnist3dCorpus>();
  const fs::path dir = fs::path(data_dir) / "mnist";
  if (!data_dir.empty() && fs::is_directory(dir)) {
    const fs::path images = dir / "train-images-idx3-ubyte";
    const fs::path labels = dir / "train-labels-idx1-ubyte";
    require_file(images);
    require_file(labels);
    const ImageCorpus source = load_idx(images.string(), labels.string());
    // Objects are laid out class-major: the first per-class quota of images,
    // in file order, becomes that class's object block.
    corpus->synthetic = false;
    corpus->labels.reserve(kMnist3dTotal);
    corpus->images.reserve(kMnist3dTotal);
    for (int c = 0; c < kMnist3dClassCount; ++c) {
      int taken = 0;
      for (std::size_t i = 0;
           i < source.labels.size() && taken < kMnist3dPerClass; ++i) {
        if (source.labels[i] != c) continue;
        corpus->labels.push_back(c);
        corpus->images.push_back(source.images[i]);
        ++taken;
      }
      if (taken < kMnist3dPerClass) {
        throw ConfigError("mnist class " + std::to_string(c) + " has only " +
                          std::to_string(taken) + " images, need " +
                          std::to_string(kMnist3dPerClass));
      }
    }
  } else {
    corpus->labels.resize(kMnist3dTotal);
    for (int i = 0; i < kMnist3dTotal; ++i) {
      corpus->labels[i] = i / kMnist3dPerClass;
    }
  }
  const std::vector<Mnist3dSplit> splits =
      split_mnist3d(corpus->labels, kMnist3dSplitSeed);
  for (int i = 0; i < kMnist3dTotal; ++i) {
    if (splits[i] == Mnist3dSplit::kTrain) corpus->train_indices.push_back(i);
    if (splits[i] == Mnist3dSplit::kTest) corpus->test_indices.push_back(i);
  }
  it = cache.emplace(data_dir, std::move(corpus)).first;
  return it->second;
}

TactileItemSource mnist3d_source(std::shared_ptr<const Mnist3dCorpus> corpus,
                                 bool test) {
  return [corpus = std::move(corpus), test](Rng& rng) -> TactileItem {
    const std::vector<int>& pool =
        test ? corpus->test_indices : corpus->train_indices;
    const int index = pool[rng.uniform_int(static_cast<int>(pool.size()))];
    const int label = corpus->labels[index];
    const BinaryImage bitmap =
        corpus->synthetic
            ? synth_digit_bitmap(label, static_cast<std::uint64_t>(index))
            : grayscale_to_digit_bitmap(corpus->images[index].data,
                                        corpus->images[index].shape[1],
                                        corpus->images[index].shape[0]);
    auto mesh = std::make_shared<const TriangleMesh>(digit_to_mesh(bitmap));
    auto bvh = std::make_shared<const DepthBvh>(*mesh);
    return TactileItem{std::move(mesh), std::move(bvh), label};
  };
}

}  // namespace

std::vector<std::string> environment_ids() {
  return {
      "CircleSquare",    "MNIST",
      "CIFAR10",         "TinyImageNet",
      "CIFAR10Loc",      "TinyImageNetLoc",
      "LightDark",       "LIDARLocMaze",
      "LIDARLocMazeStatic", "LIDARLocRooms",
      "LIDARLocRoomsStatic", "TactileMNIST",
      "Starstruck",      "Toolbox",
      "TactileMNISTVolume",
  };
}

std::unique_ptr<Environment> make_env(const EnvConfig& config) {
  const bool test = parse_split(config.split);
  const std::string& id = config.env_id;
  if (id == "CircleSquare") {
    return std::make_unique<GlimpseClassificationEnv>(
        id, circle_square_split(test), kSmallGlimpse);
  }
  if (id == "MNIST") {
    return std::make_unique<GlimpseClassificationEnv>(
        id, mnist_split(test, config.data_dir), kSmallGlimpse);
  }
  if (id == "CIFAR10") {
    return std::make_unique<GlimpseClassificationEnv>(
        id, cifar10_split(test, config.data_dir), kSmallGlimpse);
  }
  if (id == "TinyImageNet") {
    return std::make_unique<GlimpseClassificationEnv>(
        id, tinyimagenet_split(test, config.data_dir), kLargeGlimpse);
  }
  if (id == "CIFAR10Loc") {
    return std::make_unique<GlimpseLocalizationEnv>(
        id, cifar10_split(test, config.data_dir), kSmallGlimpse);
  }
  if (id == "TinyImageNetLoc") {
    return std::make_unique<GlimpseLocalizationEnv>(
        id, tinyimagenet_split(test, config.data_dir), kLargeGlimpse);
  }
  if (id == "LightDark") return std::make_unique<LightDarkEnv>();
  if (id == "LIDARLocMaze") {
    return std::make_unique<LidarLocEnv>(MapKind::kMaze, true);
  }
  if (id == "LIDARLocMazeStatic") {
    return std::make_unique<LidarLocEnv>(MapKind::kMaze, false);
  }
  if (id == "LIDARLocRooms") {
    return std::make_unique<LidarLocEnv>(MapKind::kRooms, true);
  }
  if (id == "LIDARLocRoomsStatic") {
    return std::make_unique<LidarLocEnv>(MapKind::kRooms, false);
  }
  if (id == "TactileMNIST") {
    return std::make_unique<TactileMnistEnv>(
        mnist3d_source(mnist3d_corpus(config.data_dir), test));
  }
  if (id == "Starstruck") {
    const int begin = test ? kStarstruckCorpusSize - kStarstruckTestSize : 0;
    const int end = test ? kStarstruckCorpusSize
                         : kStarstruckCorpusSize - kStarstruckTestSize;
    return std::make_unique<StarstruckEnv>(begin, end);
  }
  if (id == "Toolbox") return std::make_unique<ToolboxEnv>();
  if (id == "TactileMNISTVolume") {
    return std::make_unique<TactileVolumeEnv>(
        mnist3d_source(mnist3d_corpus(config.data_dir), test));
  }
  throw ConfigError("unknown environment '" + id + "'");
}

}  // namespace percept
