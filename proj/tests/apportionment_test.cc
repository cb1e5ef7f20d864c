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

#include "isv/apportionment.h"
#include "isv/error.h"
#include "isv/fixtures.h"
#include "isv/isv.h"
#include "oracles.h"

namespace isv {
namespace {

using testing::Q;

ApprovalProfile Profile(std::vector<std::string> parties,
                        std::vector<Ballot> ballots) {
  return {std::move(parties), std::move(ballots)};
}

TEST(GameFromApprovals, Examples) {
  const Game g = GameFromApprovals(
      Profile({"A", "B"}, {{Coalition{0}, 3}, {Coalition{0, 1}, 1}}), 4);
  EXPECT_EQ(g(Coalition{0}), 3);
  EXPECT_EQ(g(Coalition{1}), 0);
  EXPECT_EQ(g(Coalition{0, 1}), 4);

  const Game same = GameFromApprovals(Profile({"A", "B"}, {{Coalition{0, 1}, 7}}), 3);
  EXPECT_EQ(same(Coalition{0}), 0);
  EXPECT_EQ(same(Coalition{1}), 0);
  EXPECT_EQ(same(Coalition{0, 1}), 3);

  const Game single = GameFromApprovals(Profile({"A"}, {{Coalition{0}, 1}}), 9);
  EXPECT_EQ(single(Coalition{0}), 9);
}

TEST(GameFromApprovals, FractionalValues) {
  const Game g = GameFromApprovals(
      Profile({"A", "B", "C"}, {{Coalition{0}, 1}, {Coalition{1, 2}, 2}}), 2);
  EXPECT_EQ(g(Coalition{0}), Q(2, 3));
  EXPECT_EQ(g(Coalition{1, 2}), Q(4, 3));
  EXPECT_EQ(g.grand_value(), 2);
}

TEST(GameFromApprovals, Errors) {
  EXPECT_THROW(GameFromApprovals(Profile({"A"}, {}), 3), Error);
  EXPECT_THROW(GameFromApprovals(Profile({"A"}, {{Coalition{0}, 1}}), 0), Error);
  EXPECT_THROW(GameFromApprovals(Profile({"A"}, {{Coalition(), 1}}), 1), Error);
  ApprovalProfile wide;
  wide.parties.assign(22, "P");
  wide.ballots = {{Coalition{0}, 1}};
  try {
    GameFromApprovals(wide, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooManyPlayers);
  }
}

TEST(GameFromApprovals, MonotoneWithSeatTotal) {
  SplitMix64 rng(70);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + trial % 6;
    const ApprovalProfile p = RandomApprovalProfile(m, 12, rng);
    const long long seats = rng.Between(1, 15);
    const Game g = GameFromApprovals(p, seats);
    EXPECT_EQ(g.grand_value(), Q(seats));
    for (std::uint64_t t = 0; t < g.table_size(); ++t) {
      for (int i = 0; i < m; ++i) EXPECT_LE(g.value(t), g(Coalition(t).with(i)));
    }
    // Direct count of ballots inside each coalition.
    long long voters = 0;
    for (const Ballot& b : p.ballots) voters += b.count;
    for (std::uint64_t t = 0; t < g.table_size(); ++t) {
      long long inside = 0;
      for (const Ballot& b : p.ballots) {
        if (b.approvals.IsSubsetOf(Coalition(t))) inside += b.count;
      }
      EXPECT_EQ(g.value(t), Q(seats * inside, voters));
    }
  }
}

TEST(ApportionIsv, Examples) {
  EXPECT_EQ(ApportionIsv(
                Profile({"A", "B"}, {{Coalition{0}, 3}, {Coalition{0, 1}, 1}}), 4),
            (IntVector{4, 0}));
  EXPECT_EQ(ApportionIsv(Profile({"A"}, {{Coalition{0}, 5}}), 6), (IntVector{6}));
}

// Two thirds approve the triple {0,1,2}, one third the pair {3,4}.
TEST(ApportionIsv, IntroScenario) {
  const IntVector x = ApportionIsv(
      Profile({"A", "B", "C", "D", "E"},
              {{Coalition{0, 1, 2}, 66}, {Coalition{3, 4}, 33}}),
      3);
  EXPECT_EQ(x[0] + x[1] + x[2], 2);
  EXPECT_EQ(x[3] + x[4], 1);
  for (long long v : x) EXPECT_LE(v, 1);
}

TEST(ApportionIsv, QuotasOnRandomProfiles) {
  SplitMix64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 1 + trial % 6;
    const ApprovalProfile p = RandomApprovalProfile(m, 10, rng);
    const long long seats = rng.Between(1, 12);
    const IntVector x = ApportionIsv(p, seats);
    const RationalVector sv = ShapleyExact(GameFromApprovals(p, seats));
    EXPECT_EQ(std::accumulate(x.begin(), x.end(), 0LL), seats);
    for (int i = 0; i < m; ++i) {
      EXPECT_GE(x[i], ToInt64(Floor(sv[i])));
      EXPECT_LE(x[i], ToInt64(Ceil(sv[i])));
    }
  }
}

TEST(Dhondt, Examples) {
  EXPECT_EQ(Dhondt({100, 80, 30}, 8), (IntVector{4, 3, 1}));
  EXPECT_EQ(Dhondt({1, 0}, 5), (IntVector{5, 0}));
  EXPECT_EQ(Dhondt({50, 50}, 2), (IntVector{1, 1}));
  EXPECT_EQ(Dhondt({50, 50}, 1), (IntVector{1, 0}));
  // 60/2 ties 30/1: the larger list wins.
  EXPECT_EQ(Dhondt({60, 30}, 2), (IntVector{2, 0}));
  try {
    Dhondt({0, 0}, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAllZeroVotes);
  }
  EXPECT_THROW(Dhondt({1, -1}, 3), Error);
  EXPECT_THROW(Dhondt({1, 1}, 0), Error);
}

TEST(Dhondt, MatchesQuotientEnumeration) {
  SplitMix64 rng(72);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + static_cast<int>(rng.Below(6));
    std::vector<long long> votes(m);
    // Small totals make quotient ties common.
    for (long long& v : votes) v = rng.Between(0, trial % 2 ? 12 : 5000);
    if (std::accumulate(votes.begin(), votes.end(), 0LL) == 0) votes[0] = 1;
    const long long seats = rng.Between(1, 20);
    EXPECT_EQ(Dhondt(votes, seats), testing::BruteDhondt(votes, seats));
  }
}

TEST(Dhondt, HouseMonotone) {
  SplitMix64 rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + static_cast<int>(rng.Below(6));
    std::vector<long long> votes(m);
    for (long long& v : votes) v = rng.Between(1, 30);
    IntVector prev(m);
    for (long long seats = 1; seats <= 25; ++seats) {
      const IntVector x = Dhondt(votes, seats);
      EXPECT_EQ(std::accumulate(x.begin(), x.end(), 0LL), seats);
      for (int p = 0; p < m; ++p) EXPECT_GE(x[p], prev[p]);
      prev = x;
    }
  }
}

RegionalVotes OneRegion() {
  return {{"A", "B"}, {{3, {100, 80}, {30}}}};
}

TEST(CoalitionGame, Examples) {
  const Game g = CoalitionGameFromRegions(OneRegion(), Coalition{0, 1});
  EXPECT_EQ(g(Coalition{0, 1}), 3);
  EXPECT_EQ(g(Coalition()), 0);
  // Alone, A runs against B and X: D'Hondt (100, 80, 30) for 3 seats.
  EXPECT_EQ(g(Coalition{0}), Q(Dhondt({100, 80, 30}, 3)[0]));
  EXPECT_EQ(g(Coalition{1}), Q(Dhondt({100, 80, 30}, 3)[1]));
  EXPECT_EQ(StandaloneSeats(OneRegion()), (IntVector{2, 1}));
}

TEST(CoalitionGame, SubsetOfPartiesIsReindexed) {
  const RegionalVotes rv = {{"A", "B", "C"}, {{4, {10, 50, 40}, {}}}};
  const Game g = CoalitionGameFromRegions(rv, Coalition{0, 2});
  EXPECT_EQ(g.num_players(), 2);
  EXPECT_EQ(g(Coalition{0, 1}), Q(Dhondt({50, 50}, 4)[0]));
  EXPECT_EQ(g(Coalition{1}), Q(Dhondt({10, 50, 40}, 4)[2]));
}

TEST(CoalitionGame, MonotoneOnRandomRegions) {
  SplitMix64 rng(74);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + trial % 5;
    const RegionalVotes rv = RandomRegionalVotes(m, 1 + trial % 4, rng);
    const Game g = CoalitionGameFromRegions(rv, Coalition::Full(m));
    for (std::uint64_t t = 0; t < g.table_size(); ++t) {
      for (int i = 0; i < m; ++i) EXPECT_LE(g.value(t), g(Coalition(t).with(i)));
    }
    EXPECT_TRUE(IsInteger(g.grand_value()));
    IndivisibleShapley(g);
  }
}

}  // namespace
}  // namespace isv
