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

#ifndef PERCEPT_CORE_ERROR_HPP_
#define PERCEPT_CORE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace percept {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Caller passed a value outside an operation's documented domain.
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

/// Environment API used out of order (step before reset, step after end).
class LifecycleError : public Error {
 public:
  explicit LifecycleError(const std::string& what) : Error(what) {}
};

/// An internal precondition on state does not hold (e.g. raycast origin
/// inside an obstacle cell).
class InvalidState : public Error {
 public:
  explicit InvalidState(const std::string& what) : Error(what) {}
};

/// Agent wire protocol violation: out-of-turn reply, bad sequence number,
/// unexpected stream end.
class ProtocolError : public Error {
 public:
  explicit ProtocolError(const std::string& what) : Error(what) {}
};

/// A frame could not be decoded. Carries the byte offset of the failure
/// within the frame.
class DecodeError : public Error {
 public:
  DecodeError(const std::string& what, std::size_t byte_offset)
      : Error(what + " (byte " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Bad harness configuration (unknown environment id, missing data files).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace percept

#endif  // PERCEPT_CORE_ERROR_HPP_
