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

#ifndef ISV_ORACLE_H_
#define ISV_ORACLE_H_

#include <sys/types.h>

#include <cstdint>
#include <functional>
#include <list>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "isv/coalition.h"
#include "isv/game.h"

namespace isv {

// Black-box characteristic function. Evaluate(empty) must be 0 and results
// must be deterministic per coalition for the lifetime of the oracle.
class ValueOracle {
 public:
  virtual ~ValueOracle() = default;

  virtual int num_players() const = 0;
  virtual double Evaluate(Coalition c) const = 0;

  // False if Evaluate must not be called from several threads at once.
  virtual bool concurrent() const { return true; }
  // False for oracles that are cheaper to query than to cache.
  virtual bool expensive() const { return true; }
};

// Table lookups into a materialized game.
class GameOracle : public ValueOracle {
 public:
  explicit GameOracle(const Game& game);

  int num_players() const override { return n_; }
  double Evaluate(Coalition c) const override { return values_[c.bits()]; }
  bool expensive() const override { return false; }

 private:
  int n_;
  std::vector<double> values_;
};

class FunctionOracle : public ValueOracle {
 public:
  FunctionOracle(int n, std::function<double(Coalition)> fn,
                 bool concurrent = true, bool expensive = true)
      : n_(n), fn_(std::move(fn)), concurrent_(concurrent),
        expensive_(expensive) {}

  int num_players() const override { return n_; }
  double Evaluate(Coalition c) const override { return fn_(c); }
  bool concurrent() const override { return concurrent_; }
  bool expensive() const override { return expensive_; }

 private:
  int n_;
  std::function<double(Coalition)> fn_;
  bool concurrent_;
  bool expensive_;
};

// Serializes every call into a non-reentrant oracle.
class SerializedOracle : public ValueOracle {
 public:
  explicit SerializedOracle(const ValueOracle& inner) : inner_(inner) {}

  int num_players() const override { return inner_.num_players(); }
  double Evaluate(Coalition c) const override {
    std::lock_guard<std::mutex> lock(mu_);
    return inner_.Evaluate(c);
  }
  bool expensive() const override { return inner_.expensive(); }

 private:
  const ValueOracle& inner_;
  mutable std::mutex mu_;
};

// Least-recently-used memo in front of another oracle. Thread-safe; calls into
// the inner oracle run outside the cache lock when the inner oracle allows it.
class CachedOracle : public ValueOracle {
 public:
  CachedOracle(const ValueOracle& inner, std::size_t capacity);

  int num_players() const override { return inner_.num_players(); }
  double Evaluate(Coalition c) const override;
  bool expensive() const override { return false; }

  std::size_t hits() const;
  std::size_t misses() const;

 private:
  using Entry = std::pair<std::uint64_t, double>;

  const ValueOracle& inner_;
  std::size_t capacity_;
  mutable std::mutex mu_;
  mutable std::mutex inner_mu_;
  mutable std::list<Entry> lru_;
  mutable std::unordered_map<std::uint64_t, std::list<Entry>::iterator> index_;
  mutable std::size_t hits_ = 0;
  mutable std::size_t misses_ = 0;
};

// Forwards coalition queries to a child process over its stdin/stdout. One
// line per query: n characters over {0,1}, character p standing for player p.
// The child answers each with one decimal number on its own line. Calls are
// serialized internally.
class SubprocessOracle : public ValueOracle {
 public:
  // Runs `command` through /bin/sh. Throws kSpawnFailure.
  SubprocessOracle(const std::string& command, int n);
  ~SubprocessOracle() override;

  SubprocessOracle(const SubprocessOracle&) = delete;
  SubprocessOracle& operator=(const SubprocessOracle&) = delete;

  int num_players() const override { return n_; }
  // Throws kProtocolViolation for malformed replies (or a nonzero value for
  // the empty coalition) and kChildExited when the child goes away.
  double Evaluate(Coalition c) const override;

 private:
  std::string ReadLine() const;

  int n_;
  std::string command_;
  int fd_ = -1;
  pid_t pid_ = -1;
  mutable std::mutex mu_;
  mutable std::string pending_;
};

// Parses one reply line of the subprocess protocol: optional sign, digits with
// an optional fractional part, optional exponent. Surrounding whitespace is
// ignored. Throws kProtocolViolation.
double ParseOracleReply(const std::string& line);

}  // namespace isv

#endif  // ISV_ORACLE_H_
