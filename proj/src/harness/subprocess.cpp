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

#include "percept/harness/subprocess.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <csignal>
#include <cstring>
#include <mutex>
#include <thread>
#include <utility>

#include "percept/core/error.hpp"
#include "percept/harness/protocol.hpp"

namespace percept {
namespace {

// A dead child turns writes into EPIPE instead of killing the harness.
std::once_flag g_sigpipe_once;

void ignore_sigpipe() {
  std::call_once(g_sigpipe_once, [] { ::signal(SIGPIPE, SIG_IGN); });
}

}  // namespace

SubprocessAgent::SubprocessAgent(std::string command)
    : command_(std::move(command)) {
  if (command_.empty()) {
    throw InvalidArgument("agent command must not be empty");
  }
}

SubprocessAgent::~SubprocessAgent() {
  if (pid_ > 0 && to_child_ >= 0) {
    // Best effort: let a well-behaved child exit on its own.
    try {
      const std::uint64_t seq = next_seq_++;
      expect_ack(encode_close(seq), seq);
    } catch (const std::exception&) {
    }
  }
  if (to_child_ >= 0) ::close(to_child_);
  if (from_child_ >= 0) ::close(from_child_);
  if (pid_ > 0) {
    ::kill(pid_, SIGTERM);
    int status = 0;
    bool reaped = false;
    for (int i = 0; i < 100; ++i) {
      if (::waitpid(pid_, &status, WNOHANG) == pid_) {
        reaped = true;
        break;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(1));
    }
    if (!reaped) {
      ::kill(pid_, SIGKILL);
      ::waitpid(pid_, &status, 0);
    }
  }
}

void SubprocessAgent::spawn() {
  ignore_sigpipe();
  int to_pipe[2];
  int from_pipe[2];
  if (::pipe(to_pipe) != 0) {
    throw ProtocolError("pipe failed: " + std::string(std::strerror(errno)));
  }
  if (::pipe(from_pipe) != 0) {
    ::close(to_pipe[0]);
    ::close(to_pipe[1]);
    throw ProtocolError("pipe failed: " + std::string(std::strerror(errno)));
  }
  const int pid = ::fork();
  if (pid < 0) {
    ::close(to_pipe[0]);
    ::close(to_pipe[1]);
    ::close(from_pipe[0]);
    ::close(from_pipe[1]);
    throw ProtocolError("fork failed: " + std::string(std::strerror(errno)));
  }
  if (pid == 0) {
    ::dup2(to_pipe[0], STDIN_FILENO);
    ::dup2(from_pipe[1], STDOUT_FILENO);
    ::close(to_pipe[0]);
    ::close(to_pipe[1]);
    ::close(from_pipe[0]);
    ::close(from_pipe[1]);
    ::execl("/bin/sh", "sh", "-c", command_.c_str(), nullptr);
    ::_exit(127);
  }
  ::close(to_pipe[0]);
  ::close(from_pipe[1]);
  pid_ = pid;
  to_child_ = to_pipe[1];
  from_child_ = from_pipe[0];
}

void SubprocessAgent::send_line(const std::string& line) {
  std::string framed = line;
  framed.push_back('\n');
  std::size_t sent = 0;
  while (sent < framed.size()) {
    const ssize_t n =
        ::write(to_child_, framed.data() + sent, framed.size() - sent);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw ProtocolError("agent pipe write failed: " +
                          std::string(std::strerror(errno)));
    }
    sent += static_cast<std::size_t>(n);
  }
}

std::string SubprocessAgent::read_line() {
  for (;;) {
    const std::size_t nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      return line;
    }
    char chunk[4096];
    const ssize_t n = ::read(from_child_, chunk, sizeof(chunk));
    if (n < 0) {
      if (errno == EINTR) continue;
      throw ProtocolError("agent pipe read failed: " +
                          std::string(std::strerror(errno)));
    }
    if (n == 0) {
      throw ProtocolError("agent closed its output mid-conversation");
    }
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

Action SubprocessAgent::expect_act(const std::string& frame,
                                   std::uint64_t seq) {
  send_line(frame);
  const AgentReply reply = decode_agent_reply(read_line());
  if (reply.seq != seq) {
    throw ProtocolError("agent answered seq " + std::to_string(reply.seq) +
                        ", expected " + std::to_string(seq));
  }
  if (reply.ack) {
    throw ProtocolError("agent sent ack where an action was required");
  }
  return reply.action;
}

void SubprocessAgent::expect_ack(const std::string& frame, std::uint64_t seq) {
  send_line(frame);
  const AgentReply reply = decode_agent_reply(read_line());
  if (reply.seq != seq) {
    throw ProtocolError("agent answered seq " + std::to_string(reply.seq) +
                        ", expected " + std::to_string(seq));
  }
  if (!reply.ack) {
    throw ProtocolError("agent sent an action where an ack was required");
  }
}

void SubprocessAgent::begin_episode(const TaskSpec& spec, std::uint64_t seed,
                                    const Observation& first_obs) {
  if (pid_ < 0) spawn();
  if (!hello_done_) {
    const std::uint64_t seq = next_seq_++;
    expect_ack(encode_hello(seq, spec), seq);
    hello_done_ = true;
  }
  pending_.reset();
  const std::uint64_t seq = next_seq_++;
  pending_ = expect_act(encode_reset(seq, seed, first_obs), seq);
}

Action SubprocessAgent::next_action() {
  if (!pending_.has_value()) {
    throw LifecycleError("no pending action; call begin_episode or feedback");
  }
  Action action = std::move(*pending_);
  pending_.reset();
  return action;
}

void SubprocessAgent::feedback(const StepOutcome& outcome) {
  const std::uint64_t seq = next_seq_++;
  const std::string frame = encode_step(seq, outcome);
  if (outcome.terminated || outcome.truncated) {
    expect_ack(frame, seq);
  } else {
    pending_ = expect_act(frame, seq);
  }
}

}  // namespace percept
