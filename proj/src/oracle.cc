// Copyright 2026 The ISV Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isv/oracle.h"

#include <fcntl.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <regex>
#include <thread>

#include "isv/error.h"

namespace isv {

GameOracle::GameOracle(const Game& game) : n_(game.num_players()) {
  values_.reserve(game.table_size());
  for (const Rational& v : game.values()) values_.push_back(v.get_d());
}

CachedOracle::CachedOracle(const ValueOracle& inner, std::size_t capacity)
    : inner_(inner), capacity_(capacity) {}

double CachedOracle::Evaluate(Coalition c) const {
  const std::uint64_t key = c.bits();
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = index_.find(key); it != index_.end()) {
      lru_.splice(lru_.begin(), lru_, it->second);
      ++hits_;
      return it->second->second;
    }
    ++misses_;
  }
  double value;
  if (inner_.concurrent()) {
    value = inner_.Evaluate(c);
  } else {
    std::lock_guard<std::mutex> lock(inner_mu_);
    value = inner_.Evaluate(c);
  }
  std::lock_guard<std::mutex> lock(mu_);
  if (capacity_ == 0 || index_.count(key)) return value;
  lru_.emplace_front(key, value);
  index_[key] = lru_.begin();
  if (lru_.size() > capacity_) {
    index_.erase(lru_.back().first);
    lru_.pop_back();
  }
  return value;
}

std::size_t CachedOracle::hits() const {
  std::lock_guard<std::mutex> lock(mu_);
  return hits_;
}

std::size_t CachedOracle::misses() const {
  std::lock_guard<std::mutex> lock(mu_);
  return misses_;
}

double ParseOracleReply(const std::string& line) {
  static const std::regex kNumber(
      R"(\s*([+-]?(?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)(?:[eE][+-]?[0-9]+)?)\s*)");
  std::smatch match;
  if (!std::regex_match(line, match, kNumber)) {
    throw Error(ErrorCode::kProtocolViolation,
                "oracle replied '" + line + "', expected a decimal number");
  }
  return std::strtod(match[1].str().c_str(), nullptr);
}

SubprocessOracle::SubprocessOracle(const std::string& command, int n)
    : n_(n), command_(command) {
  if (n < 1 || n > kMaxOraclePlayers) {
    throw Error(ErrorCode::kInvalidArgument,
                "oracle player count " + std::to_string(n) + " outside 1..64");
  }
  if (command.empty()) {
    throw Error(ErrorCode::kSpawnFailure, "empty oracle command");
  }
  int sock[2];
  if (socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, sock) != 0) {
    throw Error(ErrorCode::kSpawnFailure,
                std::string("socketpair: ") + std::strerror(errno));
  }
  // Reports a failed exec back to the parent; closed on a successful one.
  int status_pipe[2];
  if (pipe2(status_pipe, O_CLOEXEC) != 0) {
    close(sock[0]);
    close(sock[1]);
    throw Error(ErrorCode::kSpawnFailure,
                std::string("pipe: ") + std::strerror(errno));
  }
  pid_ = fork();
  if (pid_ < 0) {
    const int err = errno;
    close(sock[0]);
    close(sock[1]);
    close(status_pipe[0]);
    close(status_pipe[1]);
    throw Error(ErrorCode::kSpawnFailure,
                std::string("fork: ") + std::strerror(err));
  }
  if (pid_ == 0) {
    dup2(sock[1], STDIN_FILENO);
    dup2(sock[1], STDOUT_FILENO);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    const int err = errno;
    (void)!write(status_pipe[1], &err, sizeof(err));
    _exit(127);
  }
  close(sock[1]);
  close(status_pipe[1]);
  int child_errno = 0;
  const ssize_t got = read(status_pipe[0], &child_errno, sizeof(child_errno));
  close(status_pipe[0]);
  fd_ = sock[0];
  if (got == static_cast<ssize_t>(sizeof(child_errno))) {
    close(fd_);
    fd_ = -1;
    waitpid(pid_, nullptr, 0);
    pid_ = -1;
    throw Error(ErrorCode::kSpawnFailure,
                "cannot run '" + command + "': " + std::strerror(child_errno));
  }
}

SubprocessOracle::~SubprocessOracle() {
  if (fd_ >= 0) {
    shutdown(fd_, SHUT_WR);
    close(fd_);
  }
  if (pid_ > 0) {
    using namespace std::chrono_literals;
    for (int attempt = 0; attempt < 200; ++attempt) {
      if (waitpid(pid_, nullptr, WNOHANG) != 0) return;
      std::this_thread::sleep_for(10ms);
    }
    kill(pid_, SIGKILL);
    waitpid(pid_, nullptr, 0);
  }
}

std::string SubprocessOracle::ReadLine() const {
  for (;;) {
    if (auto eol = pending_.find('\n'); eol != std::string::npos) {
      std::string line = pending_.substr(0, eol);
      pending_.erase(0, eol + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return line;
    }
    char buf[4096];
    const ssize_t got = recv(fd_, buf, sizeof(buf), 0);
    if (got < 0 && errno == EINTR) continue;
    if (got <= 0) {
      throw Error(ErrorCode::kChildExited,
                  "oracle process '" + command_ + "' closed its output");
    }
    pending_.append(buf, static_cast<std::size_t>(got));
  }
}

double SubprocessOracle::Evaluate(Coalition c) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (fd_ < 0) {
    throw Error(ErrorCode::kChildExited, "oracle process is gone");
  }
  const std::string query = c.ToBitString(n_) + "\n";
  std::size_t sent = 0;
  while (sent < query.size()) {
    const ssize_t put = send(fd_, query.data() + sent, query.size() - sent,
                             MSG_NOSIGNAL);
    if (put < 0 && errno == EINTR) continue;
    if (put <= 0) {
      throw Error(ErrorCode::kChildExited,
                  "oracle process '" + command_ + "' stopped reading");
    }
    sent += static_cast<std::size_t>(put);
  }
  const double value = ParseOracleReply(ReadLine());
  if (c.empty() && value != 0.0) {
    throw Error(ErrorCode::kProtocolViolation,
                "oracle assigned " + std::to_string(value) +
                    " to the empty coalition");
  }
  return value;
}

}  // namespace isv
