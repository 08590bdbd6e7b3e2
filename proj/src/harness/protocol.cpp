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

#include "percept/harness/protocol.hpp"

#include <bit>
#include <cstring>

#include "percept/core/error.hpp"

namespace percept {
namespace {

using nlohmann::json;

constexpr char kAlphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

int decode_char(char c) {
  if (c >= 'A' && c <= 'Z') return c - 'A';
  if (c >= 'a' && c <= 'z') return c - 'a' + 26;
  if (c >= '0' && c <= '9') return c - '0' + 52;
  if (c == '+') return 62;
  if (c == '/') return 63;
  return -1;
}

json parse_line(const std::string& line) {
  try {
    return json::parse(line);
  } catch (const json::parse_error& e) {
    throw DecodeError(std::string("bad frame: ") + e.what(), e.byte);
  }
}

// Wraps field lookups so missing/mistyped fields surface as DecodeError
// rather than a raw json exception.
template <typename T>
T field(const json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) {
    throw DecodeError(std::string("missing field '") + name + "'", 0);
  }
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw DecodeError(std::string("bad field '") + name + "'", 0);
  }
}

std::string type_of(const json& j) {
  if (!j.is_object()) throw DecodeError("frame is not an object", 0);
  return field<std::string>(j, "type");
}

}  // namespace

std::string base64_encode(const std::vector<std::uint8_t>& bytes) {
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 3 <= bytes.size(); i += 3) {
    const std::uint32_t v = (static_cast<std::uint32_t>(bytes[i]) << 16) |
                            (static_cast<std::uint32_t>(bytes[i + 1]) << 8) |
                            bytes[i + 2];
    out.push_back(kAlphabet[(v >> 18) & 63]);
    out.push_back(kAlphabet[(v >> 12) & 63]);
    out.push_back(kAlphabet[(v >> 6) & 63]);
    out.push_back(kAlphabet[v & 63]);
  }
  const std::size_t rest = bytes.size() - i;
  if (rest == 1) {
    const std::uint32_t v = static_cast<std::uint32_t>(bytes[i]) << 16;
    out.push_back(kAlphabet[(v >> 18) & 63]);
    out.push_back(kAlphabet[(v >> 12) & 63]);
    out.push_back('=');
    out.push_back('=');
  } else if (rest == 2) {
    const std::uint32_t v = (static_cast<std::uint32_t>(bytes[i]) << 16) |
                            (static_cast<std::uint32_t>(bytes[i + 1]) << 8);
    out.push_back(kAlphabet[(v >> 18) & 63]);
    out.push_back(kAlphabet[(v >> 12) & 63]);
    out.push_back(kAlphabet[(v >> 6) & 63]);
    out.push_back('=');
  }
  return out;
}

std::vector<std::uint8_t> base64_decode(const std::string& text) {
  if (text.size() % 4 != 0) {
    throw DecodeError("base64 length not a multiple of 4", text.size());
  }
  std::vector<std::uint8_t> out;
  out.reserve(text.size() / 4 * 3);
  for (std::size_t i = 0; i < text.size(); i += 4) {
    int vals[4];
    int pad = 0;
    for (int k = 0; k < 4; ++k) {
      const char c = text[i + k];
      if (c == '=') {
        // Padding is only legal in the last two positions of the last group.
        if (i + 4 != text.size() || k < 2) {
          throw DecodeError("unexpected base64 padding", i + k);
        }
        vals[k] = 0;
        ++pad;
      } else {
        if (pad > 0) throw DecodeError("data after base64 padding", i + k);
        vals[k] = decode_char(c);
        if (vals[k] < 0) throw DecodeError("bad base64 character", i + k);
      }
    }
    const std::uint32_t v = (static_cast<std::uint32_t>(vals[0]) << 18) |
                            (static_cast<std::uint32_t>(vals[1]) << 12) |
                            (static_cast<std::uint32_t>(vals[2]) << 6) |
                            static_cast<std::uint32_t>(vals[3]);
    out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
    if (pad < 2) out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
    if (pad < 1) out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  }
  return out;
}

nlohmann::json tensor_to_json(const Tensor& t) {
  std::vector<std::uint8_t> bytes;
  bytes.reserve(t.data.size() * 4);
  for (float f : t.data) {
    const std::uint32_t bits = std::bit_cast<std::uint32_t>(f);
    bytes.push_back(static_cast<std::uint8_t>(bits & 0xFF));
    bytes.push_back(static_cast<std::uint8_t>((bits >> 8) & 0xFF));
    bytes.push_back(static_cast<std::uint8_t>((bits >> 16) & 0xFF));
    bytes.push_back(static_cast<std::uint8_t>((bits >> 24) & 0xFF));
  }
  json j;
  j["shape"] = t.shape;
  j["data"] = base64_encode(bytes);
  return j;
}

Tensor tensor_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DecodeError("tensor is not an object", 0);
  Tensor t;
  t.shape = field<std::vector<int>>(j, "shape");
  const std::vector<std::uint8_t> bytes =
      base64_decode(field<std::string>(j, "data"));
  if (bytes.size() % 4 != 0) {
    throw DecodeError("tensor payload not float32-aligned", bytes.size());
  }
  t.data.resize(bytes.size() / 4);
  for (std::size_t i = 0; i < t.data.size(); ++i) {
    const std::uint32_t bits =
        static_cast<std::uint32_t>(bytes[4 * i]) |
        (static_cast<std::uint32_t>(bytes[4 * i + 1]) << 8) |
        (static_cast<std::uint32_t>(bytes[4 * i + 2]) << 16) |
        (static_cast<std::uint32_t>(bytes[4 * i + 3]) << 24);
    t.data[i] = std::bit_cast<float>(bits);
  }
  if (!t.consistent()) {
    throw DecodeError("tensor shape/payload mismatch", 0);
  }
  return t;
}

nlohmann::json observation_to_json(const Observation& obs) {
  json j = json::object();
  for (const auto& [name, tensor] : obs) j[name] = tensor_to_json(tensor);
  return j;
}

Observation observation_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DecodeError("observation is not an object", 0);
  Observation obs;
  for (const auto& [name, tensor] : j.items()) {
    obs[name] = tensor_from_json(tensor);
  }
  return obs;
}

std::string encode_hello(std::uint64_t seq, const TaskSpec& spec) {
  json j;
  j["type"] = "hello";
  j["seq"] = seq;
  j["protocol"] = kProtocolVersion;
  j["env"] = spec.env_id;
  j["base_action_dim"] = spec.base_action_dim;
  j["prediction"] = {
      {"kind", spec.prediction_space.kind == PredictionSpace::Kind::kClassification
                   ? "classification"
                   : "regression"},
      {"size", spec.prediction_space.size},
  };
  j["step_limit"] = spec.step_limit;
  j["reward_bonus"] = spec.reward_bonus;
  return j.dump();
}

std::string encode_reset(std::uint64_t seq, std::uint64_t seed,
                         const Observation& obs) {
  json j;
  j["type"] = "reset";
  j["seq"] = seq;
  j["seed"] = seed;
  j["obs"] = observation_to_json(obs);
  return j.dump();
}

std::string encode_step(std::uint64_t seq, const StepOutcome& outcome) {
  json j;
  j["type"] = "step";
  j["seq"] = seq;
  j["obs"] = observation_to_json(outcome.observation);
  j["reward"] = outcome.reward;
  j["loss"] = outcome.loss;
  j["terminated"] = outcome.terminated;
  j["truncated"] = outcome.truncated;
  return j.dump();
}

std::string encode_close(std::uint64_t seq) {
  json j;
  j["type"] = "close";
  j["seq"] = seq;
  return j.dump();
}

std::string encode_act(std::uint64_t seq, const Action& action) {
  json j;
  j["type"] = "act";
  j["seq"] = seq;
  j["base"] = tensor_to_json(Tensor::vec(action.base));
  j["prediction"] = tensor_to_json(Tensor::vec(action.prediction));
  if (action.oracle_prediction) j["oracle"] = true;
  return j.dump();
}

std::string encode_ack(std::uint64_t seq) {
  json j;
  j["type"] = "ack";
  j["seq"] = seq;
  return j.dump();
}

AgentReply decode_agent_reply(const std::string& line) {
  const json j = parse_line(line);
  const std::string type = type_of(j);
  AgentReply reply;
  reply.seq = field<std::uint64_t>(j, "seq");
  if (type == "ack") {
    reply.ack = true;
    return reply;
  }
  if (type != "act") {
    throw DecodeError("unexpected agent frame type '" + type + "'", 0);
  }
  reply.action.base = tensor_from_json(field<json>(j, "base")).data;
  reply.action.prediction = tensor_from_json(field<json>(j, "prediction")).data;
  if (j.contains("oracle")) {
    reply.action.oracle_prediction = field<bool>(j, "oracle");
  }
  return reply;
}

EnvMessage decode_env_message(const std::string& line) {
  const json j = parse_line(line);
  const std::string type = type_of(j);
  EnvMessage msg;
  msg.seq = field<std::uint64_t>(j, "seq");
  if (type == "hello") {
    msg.kind = EnvMessage::Kind::kHello;
    msg.env_id = field<std::string>(j, "env");
    msg.base_action_dim = field<int>(j, "base_action_dim");
    const json p = field<json>(j, "prediction");
    const std::string kind = field<std::string>(p, "kind");
    const int size = field<int>(p, "size");
    if (kind == "classification") {
      msg.prediction_space = PredictionSpace::classification(size);
    } else if (kind == "regression") {
      msg.prediction_space = PredictionSpace::regression(size);
    } else {
      throw DecodeError("bad prediction kind '" + kind + "'", 0);
    }
    msg.step_limit = field<int>(j, "step_limit");
    msg.reward_bonus = field<double>(j, "reward_bonus");
  } else if (type == "reset") {
    msg.kind = EnvMessage::Kind::kReset;
    msg.seed = field<std::uint64_t>(j, "seed");
    msg.obs = observation_from_json(field<json>(j, "obs"));
  } else if (type == "step") {
    msg.kind = EnvMessage::Kind::kStep;
    msg.obs = observation_from_json(field<json>(j, "obs"));
    msg.reward = field<double>(j, "reward");
    msg.loss = field<double>(j, "loss");
    msg.terminated = field<bool>(j, "terminated");
    msg.truncated = field<bool>(j, "truncated");
  } else if (type == "close") {
    msg.kind = EnvMessage::Kind::kClose;
  } else {
    throw DecodeError("unknown frame type '" + type + "'", 0);
  }
  return msg;
}

}  // namespace percept
