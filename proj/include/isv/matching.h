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

#ifndef ISV_MATCHING_H_
#define ISV_MATCHING_H_

#include <utility>
#include <vector>

#include "isv/coalition.h"
#include "isv/game.h"
#include "isv/rational.h"

namespace isv {

// Objects of equal value, each jointly owned by a nonempty coalition.
struct OwnerList {
  int num_players = 0;
  std::vector<Coalition> owners;

  friend bool operator==(const OwnerList&, const OwnerList&) = default;
};

// Throws kPlayerOutOfRange / kEmptySupportCoalition on malformed lists.
void Validate(const OwnerList& list);

// Bipartite graph between player copies (left) and objects (right) with a
// partial matching. Several left nodes may stand for the same player.
class BipartiteState {
 public:
  static constexpr int kUnmatched = -1;

  explicit BipartiteState(int num_objects);

  // Adds a left node for `player` adjacent to `objects`, which are scanned in
  // the given order. Returns the new node's index.
  int AddLeft(int player, std::vector<int> objects);

  int num_left() const { return static_cast<int>(adjacency_.size()); }
  int num_objects() const { return static_cast<int>(match_right_.size()); }
  int player_of(int left) const { return player_[left]; }
  const std::vector<int>& neighbors(int left) const { return adjacency_[left]; }
  int match_of_left(int left) const { return match_left_[left]; }
  int match_of_object(int object) const { return match_right_[object]; }
  int matching_size() const;

  // Matches left node `left` to `object`, both currently unmatched, along an
  // existing edge.
  void Match(int left, int object);

  // Cardinality of a maximum matching, tried from the current matching.
  friend int HopcroftKarp(BipartiteState& state);
  friend bool AugmentFrom(BipartiteState& state, int left);

 private:
  std::vector<int> player_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
};

// Grows the matching to maximum cardinality with Hopcroft-Karp phases
// (shortest augmenting paths found by BFS, vertex-disjoint paths by DFS).
// Returns the final matching size. O(E sqrt(V)).
int HopcroftKarp(BipartiteState& state);

// Looks for an alternating path from the unmatched left node `left` to a free
// object and flips it. Returns false, leaving the state unchanged, if none
// exists.
bool AugmentFrom(BipartiteState& state, int left);

// v(T) = number of objects whose owner set lies inside T.
Game GameFromOwners(const OwnerList& list,
                    int max_players = kDefaultMaxTablePlayers);

// Each player's equal share of every object it co-owns. No table needed.
RationalVector ShapleyFromOwners(const OwnerList& list);

struct Allocation {
  // assignment[j] is the player receiving object j.
  std::vector<int> assignment;
  // counts[i] is the number of objects player i receives.
  IntVector counts;
};

// Floors as a perfect matching of player copies, then one extra copy per
// player with a fractional share, tried in remainder order.
Allocation IsvAllocation(const OwnerList& list);

// ISV of the positive game with the given (nonnegative) dividends, computed
// through an owner list of the dividend residues.
IntVector IsvFromDividends(
    int n, const std::vector<std::pair<Coalition, Rational>>& dividends);

}  // namespace isv

#endif  // ISV_MATCHING_H_
