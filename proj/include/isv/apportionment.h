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

#ifndef ISV_APPORTIONMENT_H_
#define ISV_APPORTIONMENT_H_

#include <string>
#include <vector>

#include "isv/coalition.h"
#include "isv/game.h"

namespace isv {

struct Ballot {
  Coalition approvals;  // nonempty set of approved parties
  long long count = 1;  // voters casting exactly this ballot

  friend bool operator==(const Ballot&, const Ballot&) = default;
};

struct ApprovalProfile {
  std::vector<std::string> parties;
  std::vector<Ballot> ballots;

  friend bool operator==(const ApprovalProfile&,
                         const ApprovalProfile&) = default;
};

// v(S) = seats * (voters whose approval set lies inside S) / (all voters).
Game GameFromApprovals(const ApprovalProfile& profile, long long seats,
                       int max_players = kDefaultMaxTablePlayers);

// Seats per party: the Indivisible Shapley Value of the approval game.
IntVector ApportionIsv(const ApprovalProfile& profile, long long seats);

// D'Hondt highest averages. Equal quotients go to the larger raw vote, then to
// the lower party index.
IntVector Dhondt(const std::vector<long long>& votes, long long seats);

struct Region {
  long long seats = 0;
  std::vector<long long> votes;     // one entry per party
  std::vector<long long> outsiders; // totals of lists outside the party table

  friend bool operator==(const Region&, const Region&) = default;
};

struct RegionalVotes {
  std::vector<std::string> parties;
  std::vector<Region> regions;

  friend bool operator==(const RegionalVotes&, const RegionalVotes&) = default;
};

// Game over the parties in `members` (player k is the k-th member in ascending
// party order). v(T) sums, over regions, the D'Hondt seats of one list
// carrying the pooled votes of T, while every other party runs on its own
// list next to the outsider lists.
Game CoalitionGameFromRegions(const RegionalVotes& rv, Coalition members,
                              int max_players = kDefaultMaxTablePlayers);

// Seats each party wins running alone, summed over regions.
IntVector StandaloneSeats(const RegionalVotes& rv);

}  // namespace isv

#endif  // ISV_APPORTIONMENT_H_
