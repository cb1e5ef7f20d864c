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

#include "isv/fixtures.h"

#include <set>
#include <string>

namespace isv {
namespace {

Coalition RandomNonempty(int n, SplitMix64& rng) {
  const std::uint64_t full = Coalition::Full(n).bits();
  return Coalition(1 + rng.Below(full));
}

}  // namespace

Game RandomDividendGame(int n, SplitMix64& rng) {
  std::vector<std::pair<Coalition, Rational>> dividends;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (rng.Below(2) == 0) continue;
    const Rational d = ToRational(rng.Between(-4, 4), rng.Between(1, 4));
    dividends.emplace_back(Coalition(mask), d);
  }
  return GameFromDividends(n, dividends);
}

Game RandomPositiveIntegerGame(int n, SplitMix64& rng, int max_dividend) {
  std::vector<std::pair<Coalition, Rational>> dividends;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (rng.Below(2) == 0) continue;
    dividends.emplace_back(Coalition(mask),
                           ToRational(rng.Between(0, max_dividend)));
  }
  return GameFromDividends(n, dividends);
}

Game RandomConvexIntegerGame(int n, SplitMix64& rng) {
  const Game base = RandomPositiveIntegerGame(n, rng, 2);
  std::vector<Rational> values = base.values();
  std::vector<long long> weight(n);
  for (long long& w : weight) w = rng.Between(0, 2);
  const long long c = rng.Between(0, 2);
  const int t = static_cast<int>(rng.Between(1, n));
  for (std::uint64_t mask = 1; mask < values.size(); ++mask) {
    const Coalition s(mask);
    long long extra = c * std::max(0, s.size() - t);
    for (int p : s.Members()) extra += weight[p];
    values[mask] += ToRational(extra);
  }
  return Game::FromTable(n, std::move(values));
}

Game RandomSizeBoundedConvexGame(int n, SplitMix64& rng) {
  for (;;) {
    std::vector<std::pair<Coalition, Rational>> dividends;
    const int count = static_cast<int>(rng.Between(1, n));
    for (int k = 0; k < count; ++k) {
      const Coalition s = RandomNonempty(n, rng);
      if (s.size() < 2) continue;
      dividends.emplace_back(s, ToRational(rng.Between(1, s.size() - 1)));
    }
    // Merge repeats so GameFromDividends sees each coalition once.
    std::vector<Rational> merged(std::size_t{1} << n);
    for (const auto& [s, d] : dividends) merged[s.bits()] += d;
    dividends.clear();
    for (std::uint64_t mask = 1; mask < merged.size(); ++mask) {
      if (merged[mask] != 0) dividends.emplace_back(Coalition(mask), merged[mask]);
    }
    Game g = GameFromDividends(n, dividends);
    if (IsSizeBounded(g)) return g;
  }
}

Game RandomFractionalGame(int n, SplitMix64& rng) {
  const std::size_t size = std::size_t{1} << n;
  for (;;) {
    std::vector<Rational> values(size);
    for (std::size_t mask = 1; mask + 1 < size; ++mask) {
      const long long s = Coalition(mask).size();
      values[mask] = ToRational(rng.Between(0, 4 * s), rng.Between(1, 4));
    }
    values[size - 1] = ToRational(rng.Between(0, 2 * n));
    Game g = Game::FromTable(n, std::move(values));
    if (n == 1 || !IsConvex(g)) return g;
  }
}

Game RandomPositiveGame(int n, SplitMix64& rng, long long total) {
  std::vector<std::pair<Coalition, Rational>> dividends;
  Rational sum = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (rng.Below(2) == 0) continue;
    const Rational d = ToRational(rng.Between(0, 100), 100);
    if (d == 0) continue;
    dividends.emplace_back(Coalition(mask), d);
    sum += d;
  }
  if (dividends.empty()) {
    dividends.emplace_back(Coalition::Full(n), Rational(1));
    sum = 1;
  }
  for (auto& entry : dividends) entry.second *= ToRational(total) / sum;
  return GameFromDividends(n, dividends);
}

OwnerList RandomOwnerList(int n, int objects, SplitMix64& rng) {
  OwnerList list{n, {}};
  for (int k = 0; k < objects; ++k) {
    // Bias toward small owner sets, the interesting case for matching.
    Coalition s = Coalition().with(static_cast<int>(rng.Below(n)));
    while (rng.Below(2) == 0) s = s.with(static_cast<int>(rng.Below(n)));
    list.owners.push_back(s);
  }
  return list;
}

ApprovalProfile RandomApprovalProfile(int parties, int ballots,
                                      SplitMix64& rng) {
  ApprovalProfile profile;
  for (int p = 0; p < parties; ++p) {
    profile.parties.push_back("P" + std::to_string(p));
  }
  std::set<Coalition> seen;
  for (int b = 0; b < ballots; ++b) {
    const Coalition s = RandomNonempty(parties, rng);
    if (!seen.insert(s).second) continue;
    profile.ballots.push_back({s, rng.Between(1, 50)});
  }
  return profile;
}

RegionalVotes RandomRegionalVotes(int parties, int regions, SplitMix64& rng) {
  RegionalVotes rv;
  for (int p = 0; p < parties; ++p) {
    rv.parties.push_back("P" + std::to_string(p));
  }
  for (int r = 0; r < regions; ++r) {
    Region region;
    region.seats = rng.Between(1, 12);
    for (int p = 0; p < parties; ++p) {
      region.votes.push_back(rng.Between(1, 1000));
    }
    const int outsiders = static_cast<int>(rng.Below(3));
    for (int o = 0; o < outsiders; ++o) {
      region.outsiders.push_back(rng.Between(0, 1000));
    }
    rv.regions.push_back(std::move(region));
  }
  return rv;
}

}  // namespace isv
