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

#ifndef ISV_SAMPLING_H_
#define ISV_SAMPLING_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "isv/oracle.h"

namespace isv {

using ShapleyMatrix = std::vector<std::vector<double>>;

struct SamplerConfig {
  long long samples = 10000;
  std::uint64_t seed = 0;
  int workers = 1;
  // Average over all n! permutations instead of sampling; n <= 9.
  bool exhaustive = false;
  // Memo entries kept per run for oracles that report themselves expensive.
  std::size_t cache_capacity = std::size_t{1} << 20;
};

inline constexpr int kMaxExhaustivePlayers = 9;

// Sum of 1/t for t in [from, to]; 0 when from == to + 1.
double HarmonicTail(int from, int to);

// Permutation number `index` of the stream selected by `seed`.
std::vector<int> SampledPermutation(std::uint64_t seed, std::uint64_t index,
                                    int n);

// Mean marginal-contribution vector over sampled (or all) permutations.
std::vector<double> SampleShapley(const ValueOracle& oracle,
                                  const SamplerConfig& config);

// Pairwise synergy estimator. For each permutation and each player i with
// predecessor set S, every j in S with i < j receives the second difference
// v(S+i) - v(S) - v(S-j+i) + v(S-j) weighted by sum_{t=|S|+1}^{n} 1/t; the
// upper triangle is then mirrored. The diagonal stays 0.
ShapleyMatrix SampleShapleyMatrix(const ValueOracle& oracle,
                                  const SamplerConfig& config);

}  // namespace isv

#endif  // ISV_SAMPLING_H_
