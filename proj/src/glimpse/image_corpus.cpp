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

#include "percept/glimpse/image_corpus.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "percept/core/error.hpp"
#include "percept/core/rng.hpp"

namespace percept {

namespace {

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InvalidArgument("cannot open file: " + path);
  }
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  return data;
}

std::uint32_t read_be32(const std::uint8_t* p) {
  return (static_cast<std::uint32_t>(p[0]) << 24) |
         (static_cast<std::uint32_t>(p[1]) << 16) |
         (static_cast<std::uint32_t>(p[2]) << 8) |
         static_cast<std::uint32_t>(p[3]);
}

float read_le_f32(const std::uint8_t* p) {
  const std::uint32_t bits = static_cast<std::uint32_t>(p[0]) |
                             (static_cast<std::uint32_t>(p[1]) << 8) |
                             (static_cast<std::uint32_t>(p[2]) << 16) |
                             (static_cast<std::uint32_t>(p[3]) << 24);
  return std::bit_cast<float>(bits);
}

void write_le_f32(std::ostream& out, float v) {
  const std::uint32_t bits = std::bit_cast<std::uint32_t>(v);
  const char bytes[4] = {static_cast<char>(bits & 0xFF),
                         static_cast<char>((bits >> 8) & 0xFF),
                         static_cast<char>((bits >> 16) & 0xFF),
                         static_cast<char>((bits >> 24) & 0xFF)};
  out.write(bytes, 4);
}

}  // namespace

void ImageCorpus::validate() const {
  if (width <= 0 || height <= 0) {
    throw InvalidArgument("corpus: dimensions must be positive");
  }
  if (channels != 1 && channels != 3) {
    throw InvalidArgument("corpus: channels must be 1 or 3");
  }
  if (images.empty()) {
    throw InvalidArgument("corpus: no images");
  }
  if (label_count > 0 && labels.size() != images.size()) {
    throw InvalidArgument("corpus: label/image count mismatch");
  }
  const std::vector<int> expected = {height, width, channels};
  for (const Tensor& image : images) {
    if (image.shape != expected) {
      throw InvalidArgument("corpus: inconsistent image shape");
    }
  }
  for (int label : labels) {
    if (label < 0 || label >= label_count) {
      throw InvalidArgument("corpus: label out of range");
    }
  }
}

ImageCorpus corpus_subset(const ImageCorpus& corpus,
                          const std::vector<int>& indices) {
  ImageCorpus out;
  out.width = corpus.width;
  out.height = corpus.height;
  out.channels = corpus.channels;
  out.label_count = corpus.label_count;
  for (int idx : indices) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= corpus.images.size()) {
      throw InvalidArgument("corpus_subset: index out of range");
    }
    out.images.push_back(corpus.images[static_cast<std::size_t>(idx)]);
    if (!corpus.labels.empty()) {
      out.labels.push_back(corpus.labels[static_cast<std::size_t>(idx)]);
    }
  }
  return out;
}

ImageCorpus load_corpus_manifest(const std::string& manifest_path) {
  std::ifstream in(manifest_path);
  if (!in) {
    throw InvalidArgument("cannot open manifest: " + manifest_path);
  }
  std::string header;
  if (!std::getline(in, header)) {
    throw InvalidArgument("corpus manifest: missing header");
  }
  std::istringstream fields(header);
  ImageCorpus corpus;
  int count = 0;
  if (!(fields >> corpus.width >> corpus.height >> corpus.channels >> count >>
        corpus.label_count)) {
    throw InvalidArgument("corpus manifest: malformed header");
  }
  if (count <= 0) {
    throw InvalidArgument("corpus manifest: image count must be positive");
  }
  std::string payload_name;
  if (!std::getline(in, payload_name) || payload_name.empty()) {
    throw InvalidArgument("corpus manifest: missing payload file name");
  }
  if (corpus.label_count > 0) {
    corpus.labels.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      int label = 0;
      if (!(in >> label)) {
        throw InvalidArgument("corpus manifest: missing label " +
                              std::to_string(i));
      }
      corpus.labels.push_back(label);
    }
  }

  const std::filesystem::path payload_path =
      std::filesystem::path(manifest_path).parent_path() / payload_name;
  const std::vector<std::uint8_t> payload = read_file(payload_path.string());
  const std::size_t per_image = static_cast<std::size_t>(corpus.width) *
                                corpus.height * corpus.channels;
  if (payload.size() != per_image * static_cast<std::size_t>(count) * 4) {
    throw InvalidArgument("corpus payload: size mismatch");
  }
  const std::uint8_t* p = payload.data();
  for (int i = 0; i < count; ++i) {
    Tensor image;
    image.shape = {corpus.height, corpus.width, corpus.channels};
    image.data.resize(per_image);
    for (std::size_t k = 0; k < per_image; ++k, p += 4) {
      image.data[k] = read_le_f32(p);
    }
    corpus.images.push_back(std::move(image));
  }
  corpus.validate();
  return corpus;
}

void save_corpus_manifest(const std::string& manifest_path,
                          const std::string& payload_name,
                          const ImageCorpus& corpus) {
  corpus.validate();
  std::ofstream manifest(manifest_path);
  if (!manifest) {
    throw InvalidArgument("cannot write manifest: " + manifest_path);
  }
  manifest << corpus.width << " " << corpus.height << " " << corpus.channels
           << " " << corpus.images.size() << " " << corpus.label_count << "\n"
           << payload_name << "\n";
  for (int label : corpus.labels) manifest << label << "\n";

  const std::filesystem::path payload_path =
      std::filesystem::path(manifest_path).parent_path() / payload_name;
  std::ofstream payload(payload_path, std::ios::binary);
  if (!payload) {
    throw InvalidArgument("cannot write payload: " + payload_path.string());
  }
  for (const Tensor& image : corpus.images) {
    for (float v : image.data) write_le_f32(payload, v);
  }
}

ImageCorpus load_idx(const std::string& images_path,
                     const std::string& labels_path) {
  const std::vector<std::uint8_t> raw = read_file(images_path);
  if (raw.size() < 16 || read_be32(raw.data()) != 0x00000803u) {
    throw InvalidArgument("idx: bad image file magic");
  }
  const int count = static_cast<int>(read_be32(raw.data() + 4));
  const int rows = static_cast<int>(read_be32(raw.data() + 8));
  const int cols = static_cast<int>(read_be32(raw.data() + 12));
  const std::size_t per_image =
      static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  if (raw.size() != 16 + per_image * static_cast<std::size_t>(count)) {
    throw InvalidArgument("idx: image file size mismatch");
  }

  const std::vector<std::uint8_t> raw_labels = read_file(labels_path);
  if (raw_labels.size() < 8 || read_be32(raw_labels.data()) != 0x00000801u) {
    throw InvalidArgument("idx: bad label file magic");
  }
  if (static_cast<int>(read_be32(raw_labels.data() + 4)) != count ||
      raw_labels.size() != 8 + static_cast<std::size_t>(count)) {
    throw InvalidArgument("idx: label file size mismatch");
  }

  ImageCorpus corpus;
  corpus.width = cols;
  corpus.height = rows;
  corpus.channels = 1;
  corpus.label_count = 10;
  const std::uint8_t* p = raw.data() + 16;
  for (int i = 0; i < count; ++i) {
    Tensor image;
    image.shape = {rows, cols, 1};
    image.data.resize(per_image);
    for (std::size_t k = 0; k < per_image; ++k) {
      image.data[k] = static_cast<float>(*p++) / 255.0f;
    }
    corpus.images.push_back(std::move(image));
    corpus.labels.push_back(static_cast<int>(raw_labels[8 + static_cast<std::size_t>(i)]));
  }
  corpus.validate();
  return corpus;
}

ImageCorpus load_cifar10(const std::vector<std::string>& batch_paths) {
  constexpr int kSide = 32;
  constexpr std::size_t kPlane = kSide * kSide;
  constexpr std::size_t kRecord = 1 + 3 * kPlane;
  ImageCorpus corpus;
  corpus.width = kSide;
  corpus.height = kSide;
  corpus.channels = 3;
  corpus.label_count = 10;
  for (const std::string& path : batch_paths) {
    const std::vector<std::uint8_t> raw = read_file(path);
    if (raw.empty() || raw.size() % kRecord != 0) {
      throw InvalidArgument("cifar10: batch size not a record multiple: " +
                            path);
    }
    for (std::size_t off = 0; off < raw.size(); off += kRecord) {
      corpus.labels.push_back(static_cast<int>(raw[off]));
      Tensor image;
      image.shape = {kSide, kSide, 3};
      image.data.resize(3 * kPlane);
      // Planar R,G,B in the file; interleaved HWC in the tensor.
      for (std::size_t pix = 0; pix < kPlane; ++pix) {
        for (std::size_t c = 0; c < 3; ++c) {
          image.data[pix * 3 + c] =
              static_cast<float>(raw[off + 1 + c * kPlane + pix]) / 255.0f;
        }
      }
      corpus.images.push_back(std::move(image));
    }
  }
  corpus.validate();
  return corpus;
}

ImageCorpus synthetic_corpus(int width, int height, int channels, int classes,
                             int count, std::uint64_t seed) {
  if (classes < 2 || count < classes) {
    throw InvalidArgument("synthetic_corpus: need count >= classes >= 2");
  }
  ImageCorpus corpus;
  corpus.width = width;
  corpus.height = height;
  corpus.channels = channels;
  corpus.label_count = classes;
  const Rng base(seed);
  for (int i = 0; i < count; ++i) {
    const int label = i % classes;
    Rng rng = base.split(static_cast<std::uint64_t>(i));
    // Class identity fixes blob placement and stripe direction; the seed
    // stream adds per-image jitter.
    const double angle = 2.0 * M_PI * label / classes;
    const double ring = 0.18 + 0.17 * ((label * 7) % classes) / classes;
    const double bx = width / 2.0 + ring * width * std::cos(angle) +
                      rng.uniform(-1.5, 1.5);
    const double by = height / 2.0 + ring * height * std::sin(angle) +
                      rng.uniform(-1.5, 1.5);
    const double sigma = 0.08 * width + rng.uniform(-0.5, 0.5);
    const double stripe_freq = 2.0 + (label % 5);
    const double phase = rng.uniform(0.0, 2.0 * M_PI);

    Tensor image;
    image.shape = {height, width, channels};
    image.data.resize(static_cast<std::size_t>(width) * height * channels);
    std::size_t k = 0;
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        const double dx = x - bx;
        const double dy = y - by;
        const double blob =
            0.65 * std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
        for (int c = 0; c < channels; ++c) {
          const double stripes =
              0.12 * std::sin(2.0 * M_PI * stripe_freq *
                                  (x * std::cos(angle) + y * std::sin(angle)) /
                                  width +
                              phase + 0.8 * c);
          const double v = 0.25 + stripes + blob;
          image.data[k++] = static_cast<float>(std::clamp(v, 0.0, 1.0));
        }
      }
    }
    corpus.images.push_back(std::move(image));
    corpus.labels.push_back(label);
  }
  corpus.validate();
  return corpus;
}

}  // namespace percept
