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

#ifndef PERCEPT_GLIMPSE_IMAGE_CORPUS_HPP_
#define PERCEPT_GLIMPSE_IMAGE_CORPUS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "percept/core/tensor.hpp"

namespace percept {

/// Immutable image collection backing the glimpse environments. Images are
/// height-by-width-by-channel tensors with values in [0, 1]; labels are
/// empty for unlabeled corpora.
struct ImageCorpus {
  int width = 0;
  int height = 0;
  int channels = 0;
  int label_count = 0;
  std::vector<Tensor> images;
  std::vector<int> labels;

  void validate() const;
};

/// Keeps only the images at the given indices.
ImageCorpus corpus_subset(const ImageCorpus& corpus,
                          const std::vector<int>& indices);

/// Corpus exchange format: a plain-text manifest next to a raw payload.
/// Manifest line 1: "width height channels count label_count"; line 2: the
/// payload file name (resolved relative to the manifest); if label_count is
/// nonzero, one label per following line. The payload holds count images of
/// little-endian float32, image-major, row-major, channels interleaved last.
ImageCorpus load_corpus_manifest(const std::string& manifest_path);
void save_corpus_manifest(const std::string& manifest_path,
                          const std::string& payload_name,
                          const ImageCorpus& corpus);

/// IDX-format reader (the MNIST distribution format): big-endian dims,
/// unsigned-byte pixels scaled to [0, 1].
ImageCorpus load_idx(const std::string& images_path,
                     const std::string& labels_path);

/// CIFAR-10 binary batches: records of one label byte plus 3072 planar RGB
/// bytes, 32x32, scaled to [0, 1].
ImageCorpus load_cifar10(const std::vector<std::string>& batch_paths);

/// Deterministic procedural stand-in corpus used when no dataset files are
/// supplied: per-class blob-and-stripe patterns with seeded variation.
ImageCorpus synthetic_corpus(int width, int height, int channels, int classes,
                             int count, std::uint64_t seed);

}  // namespace percept

#endif  // PERCEPT_GLIMPSE_IMAGE_CORPUS_HPP_
