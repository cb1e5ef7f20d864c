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

#ifndef ISV_ISV_H_
#define ISV_ISV_H_

#include <string>
#include <vector>

#include "isv/game.h"
#include "isv/rational.h"

namespace isv {

// A permutation of players sorted by Shapley remainder sv_i - floor(sv_i),
// largest first, with equal remainders in ascending player index.
using TieBreakOrder = std::vector<int>;

TieBreakOrder RemainderOrder(const RationalVector& sv);

struct IsvEvent {
  enum class Kind { kFloorAssigned, kRemovedZero, kGrantedUnit };
  int player;  // index in the input game
  Kind kind;
  long long amount;  // floor for kFloorAssigned, else 0 or 1

  friend bool operator==(const IsvEvent&, const IsvEvent&) = default;
};

std::string ToString(const IsvEvent& event);

// A game reached during the run together with the input-game labels of its
// players.
struct IsvStage {
  Game game;
  std::vector<int> players;
};

struct IsvResult {
  IntVector payoffs;
  std::vector<IsvEvent> trace;
  // Filled only when IsvOptions::record_stages is set: the game after the
  // floor step and the zero removals, then the game after every granted unit.
  std::vector<IsvStage> stages;
};

struct IsvOptions {
  bool record_stages = false;
  int max_players = kDefaultMaxTablePlayers;
};

// The Indivisible Shapley Value. Requires v(N) to be a nonnegative integer;
// other coalition values may be fractional.
IsvResult IndivisibleShapley(const Game& game, const IsvOptions& options = {});

// Brute-force reference for convex integer games: among all vectors with
// entries in {floor(sv_i), ceil(sv_i)} that are efficient and in the core,
// the lexicographically largest when read in RemainderOrder. Exponential in n.
IntVector IsvOracleConvex(const Game& game);

// Every efficient core vector within the Shapley quotas, in enumeration order.
std::vector<IntVector> QuotaCoreVectors(const Game& game);

// Sum over i of |sv_i - x_i|^p, exact.
Rational LpDistance(const IntVector& x, const RationalVector& sv, int p);

}  // namespace isv

#endif  // ISV_ISV_H_
