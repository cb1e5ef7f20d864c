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

#include "isv/sampling.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <numeric>
#include <string>
#include <thread>

#include "isv/error.h"
#include "isv/rng.h"

namespace isv {
namespace {

// Work is split into this many contiguous chunks of permutation indices no
// matter how many workers run; partial sums are merged in chunk order, so the
// result does not depend on the worker count.
constexpr long long kChunks = 64;

double Query(const ValueOracle& oracle, Coalition c) {
  try {
    return oracle.Evaluate(c);
  } catch (const Error& e) {
    throw Error(e.code(), e.detail() + " (coalition " +
                              c.ToBitString(oracle.num_players()) + ")");
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kOracleFailure,
                std::string(e.what()) + " (coalition " +
                    c.ToBitString(oracle.num_players()) + ")");
  }
}

// Wraps the caller's oracle for one run: a memo for expensive oracles and a
// lock for non-reentrant ones.
class RunOracle {
 public:
  RunOracle(const ValueOracle& oracle, const SamplerConfig& config) {
    const ValueOracle* use = &oracle;
    if (!oracle.concurrent()) {
      serial_ = std::make_unique<SerializedOracle>(*use);
      use = serial_.get();
    }
    if (config.cache_capacity > 0 && oracle.expensive()) {
      cache_ = std::make_unique<CachedOracle>(*use, config.cache_capacity);
      use = cache_.get();
    }
    use_ = use;
  }

  const ValueOracle& get() const { return *use_; }

 private:
  std::unique_ptr<SerializedOracle> serial_;
  std::unique_ptr<CachedOracle> cache_;
  const ValueOracle* use_;
};

void CheckOracle(const ValueOracle& oracle, const SamplerConfig& config) {
  const int n = oracle.num_players();
  if (n < 1 || n > kMaxOraclePlayers) {
    throw Error(ErrorCode::kInvalidArgument,
                "oracle reports " + std::to_string(n) + " players");
  }
  if (config.workers < 1) {
    throw Error(ErrorCode::kInvalidArgument, "workers must be positive");
  }
  if (config.exhaustive) {
    if (n > kMaxExhaustivePlayers) {
      throw Error(ErrorCode::kTooManyPlayers,
                  "exhaustive enumeration supports at most " +
                      std::to_string(kMaxExhaustivePlayers) + " players");
    }
  } else if (config.samples < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "sample count must be positive, got " +
                    std::to_string(config.samples));
  }
  const double empty = Query(oracle, Coalition());
  if (empty != 0.0) {
    throw Error(ErrorCode::kOracleFailure,
                "v(empty) = " + std::to_string(empty) + ", expected 0");
  }
}

// Calls fn(permutation, accumulator) for every permutation of the run and
// returns the accumulator divided by the number of permutations.
template <typename PerPermutation>
std::vector<double> Drive(int n, const SamplerConfig& config,
                          std::size_t width, PerPermutation fn) {
  if (config.exhaustive) {
    std::vector<double> acc(width, 0.0);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long count = 0;
    do {
      fn(perm, acc);
      ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (double& x : acc) x /= static_cast<double>(count);
    return acc;
  }

  const long long k = config.samples;
  const long long chunks = std::min(kChunks, k);
  std::vector<std::vector<double>> partial(chunks,
                                           std::vector<double>(width, 0.0));
  std::vector<std::exception_ptr> errors(chunks);
  std::atomic<long long> next{0};
  std::atomic<bool> failed{false};

  auto work = [&]() {
    for (long long c = next++; c < chunks && !failed; c = next++) {
      const long long begin = k * c / chunks;
      const long long end = k * (c + 1) / chunks;
      try {
        for (long long t = begin; t < end; ++t) {
          fn(SampledPermutation(config.seed, static_cast<std::uint64_t>(t), n),
             partial[c]);
        }
      } catch (...) {
        errors[c] = std::current_exception();
        failed = true;
      }
    }
  };

  const int threads =
      static_cast<int>(std::min<long long>(config.workers, chunks));
  std::vector<std::thread> pool;
  for (int w = 1; w < threads; ++w) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<double> acc(width, 0.0);
  for (const std::vector<double>& part : partial) {
    for (std::size_t x = 0; x < width; ++x) acc[x] += part[x];
  }
  for (double& x : acc) x /= static_cast<double>(k);
  return acc;
}

}  // namespace

double HarmonicTail(int from, int to) {
  if (from < 1 || from > to + 1) {
    throw Error(ErrorCode::kInvalidRange,
                "harmonic tail [" + std::to_string(from) + ", " +
                    std::to_string(to) + "]");
  }
  double sum = 0.0;
  for (int t = from; t <= to; ++t) sum += 1.0 / t;
  return sum;
}

std::vector<int> SampledPermutation(std::uint64_t seed, std::uint64_t index,
                                    int n) {
  SplitMix64 rng = SplitMix64::ForStream(seed, index);
  return RandomPermutation(n, rng);
}

std::vector<double> SampleShapley(const ValueOracle& oracle,
                                  const SamplerConfig& config) {
  CheckOracle(oracle, config);
  const RunOracle run(oracle, config);
  const ValueOracle& v = run.get();
  const int n = oracle.num_players();
  return Drive(n, config, n,
               [&v](const std::vector<int>& perm, std::vector<double>& acc) {
                 Coalition s;
                 double prev = 0.0;
                 for (int p : perm) {
                   s = s.with(p);
                   const double cur = Query(v, s);
                   acc[p] += cur - prev;
                   prev = cur;
                 }
               });
}

ShapleyMatrix SampleShapleyMatrix(const ValueOracle& oracle,
                                  const SamplerConfig& config) {
  CheckOracle(oracle, config);
  const RunOracle run(oracle, config);
  const ValueOracle& v = run.get();
  const int n = oracle.num_players();

  // tail[s] = sum_{t=s}^{n} 1/t for s in 1..n.
  std::vector<double> tail(n + 2, 0.0);
  for (int s = 1; s <= n + 1; ++s) tail[s] = HarmonicTail(s, n);

  const std::vector<double> flat = Drive(
      n, config, static_cast<std::size_t>(n) * n,
      [&](const std::vector<int>& perm, std::vector<double>& acc) {
        std::vector<Coalition> prefix(n + 1);
        std::vector<double> value(n + 1, 0.0);
        for (int t = 0; t < n; ++t) {
          prefix[t + 1] = prefix[t].with(perm[t]);
          value[t + 1] = Query(v, prefix[t + 1]);
        }
        for (int t = 1; t < n; ++t) {
          const int i = perm[t];
          const Coalition before = prefix[t];
          const double marginal = value[t + 1] - value[t];
          const double weight = tail[t + 1];
          for (int u = 0; u < t; ++u) {
            const int j = perm[u];
            if (j < i) continue;
            const Coalition drop = before.without(j);
            const double second =
                marginal - (Query(v, drop.with(i)) - Query(v, drop));
            acc[static_cast<std::size_t>(i) * n + j] += second * weight;
          }
        }
      });

  ShapleyMatrix m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      m[i][j] = flat[static_cast<std::size_t>(i) * n + j];
      m[j][i] = m[i][j];
    }
  }
  return m;
}

}  // namespace isv
