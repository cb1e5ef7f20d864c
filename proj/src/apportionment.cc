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

#include "isv/apportionment.h"

#include <string>

#include "isv/error.h"
#include "isv/isv.h"

namespace isv {
namespace {

void CheckSeats(long long seats) {
  if (seats < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "seat count must be positive, got " + std::to_string(seats));
  }
}

void CheckRegion(const Region& region, std::size_t num_parties,
                 std::size_t index) {
  const std::string where = "region " + std::to_string(index);
  CheckSeats(region.seats);
  if (region.votes.size() != num_parties) {
    throw Error(ErrorCode::kLengthMismatch,
                where + " lists " + std::to_string(region.votes.size()) +
                    " party totals for " + std::to_string(num_parties) +
                    " parties");
  }
  long long total = 0;
  for (long long v : region.votes) {
    if (v < 0) throw Error(ErrorCode::kInvalidArgument, where + ": negative vote");
    total += v;
  }
  for (long long v : region.outsiders) {
    if (v < 0) throw Error(ErrorCode::kInvalidArgument, where + ": negative vote");
    total += v;
  }
  if (total == 0) {
    throw Error(ErrorCode::kAllZeroVotes, where + " has no votes");
  }
}

}  // namespace

Game GameFromApprovals(const ApprovalProfile& profile, long long seats,
                       int max_players) {
  CheckSeats(seats);
  const int m = static_cast<int>(profile.parties.size());
  if (m < 1) {
    throw Error(ErrorCode::kInvalidArgument, "no parties");
  }
  if (m > max_players) {
    throw Error(ErrorCode::kTooManyPlayers,
                std::to_string(m) + " parties exceed the cap of " +
                    std::to_string(max_players));
  }
  std::vector<Integer> count(std::size_t{1} << m, Integer(0));
  Integer voters = 0;
  for (const Ballot& b : profile.ballots) {
    if (b.approvals.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "empty approval set");
    }
    if (b.approvals.Span() > m) {
      throw Error(ErrorCode::kPlayerOutOfRange,
                  "ballot approves {" + b.approvals.ToString() + "} with " +
                      std::to_string(m) + " parties");
    }
    if (b.count < 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "ballot multiplicity must be positive");
    }
    count[b.approvals.bits()] += static_cast<long>(b.count);
    voters += static_cast<long>(b.count);
  }
  if (voters == 0) throw Error(ErrorCode::kNoBallots, "no ballots cast");

  for (int bit = 0; bit < m; ++bit) {
    const std::uint64_t b = std::uint64_t{1} << bit;
    for (std::uint64_t mask = 0; mask < count.size(); ++mask) {
      if (mask & b) count[mask] += count[mask ^ b];
    }
  }
  std::vector<Rational> values(count.size());
  const Integer s(static_cast<long>(seats));
  for (std::size_t mask = 0; mask < count.size(); ++mask) {
    values[mask] = Rational(s * count[mask], voters);
    values[mask].canonicalize();
  }
  return Game::FromTable(m, std::move(values), max_players);
}

IntVector ApportionIsv(const ApprovalProfile& profile, long long seats) {
  return IndivisibleShapley(GameFromApprovals(profile, seats)).payoffs;
}

IntVector Dhondt(const std::vector<long long>& votes, long long seats) {
  CheckSeats(seats);
  bool any = false;
  for (long long v : votes) {
    if (v < 0) throw Error(ErrorCode::kInvalidArgument, "negative vote total");
    any |= v > 0;
  }
  if (!any) throw Error(ErrorCode::kAllZeroVotes, "every list has zero votes");

  const std::size_t m = votes.size();
  IntVector won(m, 0);
  for (long long round = 0; round < seats; ++round) {
    std::size_t best = 0;
    for (std::size_t p = 1; p < m; ++p) {
      // Compare votes[p] / (won[p] + 1) against votes[best] / (won[best] + 1).
      const __int128 lhs = static_cast<__int128>(votes[p]) * (won[best] + 1);
      const __int128 rhs = static_cast<__int128>(votes[best]) * (won[p] + 1);
      if (lhs > rhs || (lhs == rhs && votes[p] > votes[best])) best = p;
    }
    ++won[best];
  }
  return won;
}

Game CoalitionGameFromRegions(const RegionalVotes& rv, Coalition members,
                              int max_players) {
  const std::size_t m = rv.parties.size();
  if (members.empty()) {
    throw Error(ErrorCode::kEmptySupportCoalition, "no coalition members");
  }
  if (members.Span() > static_cast<int>(m)) {
    throw Error(ErrorCode::kPlayerOutOfRange,
                "members {" + members.ToString() + "} with " +
                    std::to_string(m) + " parties");
  }
  for (std::size_t r = 0; r < rv.regions.size(); ++r) {
    CheckRegion(rv.regions[r], m, r);
  }
  const std::vector<int> parties = members.Members();
  const int k = static_cast<int>(parties.size());
  if (k > max_players) {
    throw Error(ErrorCode::kTooManyPlayers,
                std::to_string(k) + " members exceed the cap of " +
                    std::to_string(max_players));
  }

  std::vector<Rational> values(std::size_t{1} << k);
  values[0] = 0;
  std::vector<long long> lists;
  for (std::uint64_t t = 1; t < values.size(); ++t) {
    Coalition merged;
    for (int local = 0; local < k; ++local) {
      if ((t >> local) & 1) merged = merged.with(parties[local]);
    }
    long long seats = 0;
    for (const Region& region : rv.regions) {
      lists.assign(1, 0);
      for (std::size_t p = 0; p < m; ++p) {
        if (merged.contains(static_cast<int>(p))) {
          lists[0] += region.votes[p];
        } else {
          lists.push_back(region.votes[p]);
        }
      }
      lists.insert(lists.end(), region.outsiders.begin(),
                   region.outsiders.end());
      seats += Dhondt(lists, region.seats)[0];
    }
    values[t] = static_cast<long>(seats);
  }
  return Game::FromTable(k, std::move(values), max_players);
}

IntVector StandaloneSeats(const RegionalVotes& rv) {
  const std::size_t m = rv.parties.size();
  IntVector total(m, 0);
  for (std::size_t r = 0; r < rv.regions.size(); ++r) {
    const Region& region = rv.regions[r];
    CheckRegion(region, m, r);
    std::vector<long long> lists = region.votes;
    lists.insert(lists.end(), region.outsiders.begin(),
                 region.outsiders.end());
    const IntVector won = Dhondt(lists, region.seats);
    for (std::size_t p = 0; p < m; ++p) total[p] += won[p];
  }
  return total;
}

}  // namespace isv
