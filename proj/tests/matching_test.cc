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

#include <gtest/gtest.h>

#include <numeric>

#include "isv/error.h"
#include "isv/fixtures.h"
#include "isv/isv.h"
#include "isv/matching.h"
#include "oracles.h"

namespace isv {
namespace {

using testing::Q;

OwnerList Hunters() {
  return {5, {Coalition{0, 1, 2}, Coalition{0, 1, 4}, Coalition{2, 3},
              Coalition{2, 3, 4}}};
}

// v(T) counted directly: objects whose owners all lie in T.
Game CountGame(const OwnerList& list) {
  return testing::BuildGame(list.num_players, [&](Coalition t) {
    long long count = 0;
    for (Coalition s : list.owners) count += s.IsSubsetOf(t);
    return Q(count);
  });
}

TEST(GameFromOwners, Hunters) {
  const Game g = GameFromOwners(Hunters());
  EXPECT_EQ(g.grand_value(), 4);
  EXPECT_EQ(g(Coalition{2, 3}), 1);
  EXPECT_EQ(g(Coalition{2, 3, 4}), 2);
  EXPECT_EQ(g, CountGame(Hunters()));
  EXPECT_TRUE(IsPositive(g));
}

TEST(GameFromOwners, SmallCases) {
  const Game single = GameFromOwners({3, {Coalition{0}}});
  for (std::uint64_t m = 0; m < 8; ++m) {
    EXPECT_EQ(single.value(m), Coalition(m).contains(0) ? 1 : 0);
  }
  EXPECT_EQ(GameFromOwners({3, {}}), Game(3));
  EXPECT_THROW(GameFromOwners({25, {}}), Error);
  EXPECT_THROW(Validate({2, {Coalition()}}), Error);
  EXPECT_THROW(Validate({2, {Coalition{2}}}), Error);
}

TEST(ShapleyFromOwners, Examples) {
  EXPECT_EQ(ShapleyFromOwners(Hunters()),
            (RationalVector{Q(2, 3), Q(2, 3), Q(7, 6), Q(5, 6), Q(2, 3)}));
  EXPECT_EQ(ShapleyFromOwners({2, {Coalition{0, 1}}}),
            (RationalVector{Q(1, 2), Q(1, 2)}));
  EXPECT_EQ(ShapleyFromOwners({3, {Coalition{0}, Coalition{0}}}),
            (RationalVector{Q(2), Q(0), Q(0)}));
  // Works without a table at 64 players.
  EXPECT_EQ(ShapleyFromOwners({64, {Coalition{0, 63}}})[63], Q(1, 2));
}

TEST(ShapleyFromOwners, MatchesExact) {
  SplitMix64 rng(60);
  for (int trial = 0; trial < 50; ++trial) {
    const OwnerList list = RandomOwnerList(1 + trial % 6, trial % 9, rng);
    EXPECT_EQ(ShapleyFromOwners(list), ShapleyExact(GameFromOwners(list)));
  }
}

TEST(HopcroftKarp, SmallGraphs) {
  BipartiteState complete(2);
  complete.AddLeft(0, {0, 1});
  complete.AddLeft(1, {0, 1});
  EXPECT_EQ(HopcroftKarp(complete), 2);

  BipartiteState star(1);
  for (int p = 0; p < 3; ++p) star.AddLeft(p, {0});
  EXPECT_EQ(HopcroftKarp(star), 1);

  // Hunters with floor copies: only player 2 has a floor of 1.
  BipartiteState floors(4);
  floors.AddLeft(2, {0, 2, 3});
  EXPECT_EQ(HopcroftKarp(floors), 1);
}

// Maximum matching size by trying every injection of left nodes.
int BruteMatching(const std::vector<std::vector<int>>& adj, int objects) {
  std::vector<bool> used(objects);
  std::function<int(std::size_t)> rec = [&](std::size_t i) -> int {
    if (i == adj.size()) return 0;
    int best = rec(i + 1);
    for (int o : adj[i]) {
      if (used[o]) continue;
      used[o] = true;
      best = std::max(best, 1 + rec(i + 1));
      used[o] = false;
    }
    return best;
  };
  return rec(0);
}

TEST(HopcroftKarp, MaximumOnRandomGraphs) {
  SplitMix64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const int left = static_cast<int>(rng.Between(0, 6));
    const int objects = static_cast<int>(rng.Between(0, 6));
    BipartiteState state(objects);
    std::vector<std::vector<int>> adj(left);
    for (int l = 0; l < left; ++l) {
      for (int o = 0; o < objects; ++o) {
        if (rng.Below(3) == 0) adj[l].push_back(o);
      }
      state.AddLeft(l, adj[l]);
    }
    EXPECT_EQ(HopcroftKarp(state), BruteMatching(adj, objects));
    EXPECT_EQ(state.matching_size(), BruteMatching(adj, objects));
    for (int l = 0; l < left; ++l) {
      const int o = state.match_of_left(l);
      if (o == BipartiteState::kUnmatched) continue;
      EXPECT_EQ(state.match_of_object(o), l);
      EXPECT_NE(std::find(adj[l].begin(), adj[l].end(), o), adj[l].end());
    }
  }
}

TEST(AugmentFrom, PathsAndFailures) {
  BipartiteState direct(2);
  direct.AddLeft(0, {0});
  HopcroftKarp(direct);
  const int added = direct.AddLeft(1, {1});
  EXPECT_TRUE(AugmentFrom(direct, added));
  EXPECT_EQ(direct.matching_size(), 2);

  BipartiteState blocked(1);
  blocked.AddLeft(0, {0});
  HopcroftKarp(blocked);
  const int extra = blocked.AddLeft(1, {0});
  EXPECT_FALSE(AugmentFrom(blocked, extra));
  EXPECT_EQ(blocked.match_of_left(0), 0);
  EXPECT_EQ(blocked.match_of_left(extra), BipartiteState::kUnmatched);

  // Alternating path: the new node takes object 0 and pushes node 0 to 1.
  BipartiteState chain(2);
  chain.AddLeft(0, {0, 1});
  chain.Match(0, 0);
  const int fresh = chain.AddLeft(1, {0});
  EXPECT_TRUE(AugmentFrom(chain, fresh));
  EXPECT_EQ(chain.match_of_left(fresh), 0);
  EXPECT_EQ(chain.match_of_left(0), 1);
}

TEST(AugmentFrom, HuntersTrace) {
  BipartiteState state(4);
  state.AddLeft(2, {0, 2, 3});
  HopcroftKarp(state);
  const int copy = state.AddLeft(3, {2, 3});
  EXPECT_TRUE(AugmentFrom(state, copy));
}

TEST(IsvAllocation, Hunters) {
  const Allocation a = IsvAllocation(Hunters());
  EXPECT_EQ(a.counts, (IntVector{1, 1, 1, 1, 0}));
  for (std::size_t j = 0; j < a.assignment.size(); ++j) {
    EXPECT_TRUE(Hunters().owners[j].contains(a.assignment[j]));
  }
}

TEST(IsvAllocation, SmallCases) {
  EXPECT_EQ(IsvAllocation({2, {Coalition{0, 1}}}).counts, (IntVector{1, 0}));
  const Allocation forced = IsvAllocation({2, {Coalition{0}, Coalition{1}}});
  EXPECT_EQ(forced.counts, (IntVector{1, 1}));
  EXPECT_EQ(forced.assignment, (std::vector<int>{0, 1}));
  EXPECT_EQ(IsvAllocation({3, {}}).counts, (IntVector{0, 0, 0}));
}

TEST(IsvAllocation, AgreesWithIsvAndKeepsInvariants) {
  SplitMix64 rng(62);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + trial % 6;
    const OwnerList list =
        RandomOwnerList(n, static_cast<int>(rng.Between(0, 8)), rng);
    const Allocation a = IsvAllocation(list);
    const Game g = GameFromOwners(list);
    EXPECT_EQ(a.counts, IndivisibleShapley(g).payoffs);
    EXPECT_EQ(std::accumulate(a.counts.begin(), a.counts.end(), 0LL),
              static_cast<long long>(list.owners.size()));
    const RationalVector sv = ShapleyFromOwners(list);
    for (int i = 0; i < n; ++i) {
      EXPECT_GE(a.counts[i], ToInt64(Floor(sv[i])));
      EXPECT_LE(a.counts[i], ToInt64(Ceil(sv[i])));
    }
    EXPECT_TRUE(InCore(g, a.counts));
    IntVector counted(n);
    for (std::size_t j = 0; j < a.assignment.size(); ++j) {
      ASSERT_TRUE(list.owners[j].contains(a.assignment[j]));
      ++counted[a.assignment[j]];
    }
    EXPECT_EQ(counted, a.counts);
    EXPECT_EQ(IsvAllocation(list).assignment, a.assignment);
  }
}

// Hall's condition on the floor copies: a perfect matching of copies exists.
TEST(IsvAllocation, FloorCopiesAlwaysMatch) {
  SplitMix64 rng(63);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + trial % 6;
    const OwnerList list = RandomOwnerList(n, 1 + trial % 10, rng);
    const RationalVector sv = ShapleyFromOwners(list);
    BipartiteState state(static_cast<int>(list.owners.size()));
    for (int i = 0; i < n; ++i) {
      std::vector<int> objects;
      for (std::size_t j = 0; j < list.owners.size(); ++j) {
        if (list.owners[j].contains(i)) objects.push_back(static_cast<int>(j));
      }
      for (long long k = 0; k < ToInt64(Floor(sv[i])); ++k) {
        state.AddLeft(i, objects);
      }
    }
    EXPECT_EQ(HopcroftKarp(state), state.num_left());
  }
}

TEST(IsvFromDividends, Examples) {
  EXPECT_EQ(IsvFromDividends(5, {{Coalition{0, 1, 2}, Q(2)}, {Coalition{3, 4}, Q(1)}}),
            (IntVector{1, 1, 0, 1, 0}));
  EXPECT_EQ(IsvFromDividends(1, {{Coalition{0}, Q(5)}}), (IntVector{5}));
  EXPECT_EQ(IsvFromDividends(2, {{Coalition{0, 1}, Q(3)}}), (IntVector{2, 1}));
}

TEST(IsvFromDividends, Errors) {
  auto code = [](int n, std::vector<std::pair<Coalition, Rational>> d) {
    try {
      IsvFromDividends(n, d);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code(2, {{Coalition{0, 1}, Q(-1)}}), ErrorCode::kNegativeDividend);
  EXPECT_EQ(code(2, {{Coalition{0, 1}, Q(1, 2)}}),
            ErrorCode::kNonIntegerResidue);
  EXPECT_EQ(code(2, {{Coalition{0}, Q(1)}, {Coalition{0}, Q(1)}}),
            ErrorCode::kDuplicateCoalition);
  EXPECT_EQ(code(2, {{Coalition{2}, Q(1)}}), ErrorCode::kPlayerOutOfRange);
}

TEST(IsvFromDividends, MatchesIsv) {
  SplitMix64 rng(64);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 6;
    const Game g = RandomPositiveIntegerGame(n, rng, 4);
    std::vector<std::pair<Coalition, Rational>> d;
    const std::vector<Rational> div = HarsanyiDividends(g);
    for (std::uint64_t m = 1; m < div.size(); ++m) {
      if (div[m] != 0) d.emplace_back(Coalition(m), div[m]);
    }
    EXPECT_EQ(IsvFromDividends(n, d), IndivisibleShapley(g).payoffs);
  }
}

}  // namespace
}  // namespace isv
