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

#include "percept/core/tensor.hpp"

#include <cstring>

#include "percept/core/error.hpp"

namespace percept {
namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void fnv_bytes(std::uint64_t& h, const void* bytes, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(bytes);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
}

void fnv_tensor(std::uint64_t& h, const Tensor& t) {
  const std::uint32_t rank = static_cast<std::uint32_t>(t.shape.size());
  fnv_bytes(h, &rank, sizeof(rank));
  for (int d : t.shape) {
    const std::int32_t d32 = d;
    fnv_bytes(h, &d32, sizeof(d32));
  }
  for (float v : t.data) {
    std::uint32_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    fnv_bytes(h, &bits, sizeof(bits));
  }
}

}  // namespace

Tensor Tensor::vec(std::vector<float> v) {
  Tensor t;
  t.shape = {static_cast<int>(v.size())};
  t.data = std::move(v);
  return t;
}

Tensor Tensor::zeros(std::vector<int> shape) {
  Tensor t;
  t.shape = std::move(shape);
  t.data.assign(static_cast<std::size_t>(t.element_count()), 0.0f);
  return t;
}

std::int64_t Tensor::element_count() const {
  std::int64_t n = 1;
  for (int d : shape) {
    if (d < 0) throw InvalidArgument("tensor shape has negative dimension");
    n *= d;
  }
  return n;
}

std::uint64_t fingerprint(const Tensor& t) {
  std::uint64_t h = kFnvOffset;
  fnv_tensor(h, t);
  return h;
}

std::uint64_t fingerprint(const Observation& obs) {
  std::uint64_t h = kFnvOffset;
  for (const auto& [name, tensor] : obs) {
    fnv_bytes(h, name.data(), name.size());
    fnv_tensor(h, tensor);
  }
  return h;
}

}  // namespace percept
