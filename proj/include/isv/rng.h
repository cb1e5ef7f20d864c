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

#ifndef ISV_RNG_H_
#define ISV_RNG_H_

#include <cstdint>
#include <numeric>
#include <vector>

namespace isv {

// SplitMix64. Small, fast, and fully specified, so streams are reproducible
// across standard libraries (unlike std::uniform_int_distribution).
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by multiply-shift; bias is at most bound / 2^64.
  std::uint64_t Below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>((*this)()) * bound) >> 64);
  }

  // Uniform in [lo, hi].
  long long Between(long long lo, long long hi) {
    return lo + static_cast<long long>(
                    Below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Uniform in [0, 1) with 53 random bits.
  double Unit() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // Independent generator for stream `index` of a seed: stream t of a run is
  // reproducible on its own, without generating streams 0..t-1.
  static SplitMix64 ForStream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed);
    const std::uint64_t base = mix();
    SplitMix64 mix2(base ^ (index * 0xD1B54A32D192ED03ULL));
    return SplitMix64(mix2());
  }

 private:
  std::uint64_t state_;
};

// Fisher-Yates shuffle of 0..n-1.
inline std::vector<int> RandomPermutation(int n, SplitMix64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.Below(static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

}  // namespace isv

#endif  // ISV_RNG_H_
