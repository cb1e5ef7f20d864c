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

#ifndef ISV_GAME_H_
#define ISV_GAME_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "isv/coalition.h"
#include "isv/rational.h"

namespace isv {

// Full characteristic-function tables hold 2^n exact rationals; above this
// many players a game has to be accessed through a ValueOracle instead.
inline constexpr int kDefaultMaxTablePlayers = 20;

using RationalMatrix = std::vector<RationalVector>;

// A transferable-utility game with an explicit value table indexed by the
// coalition bit mask. Immutable once built.
class Game {
 public:
  // The null game on n players.
  explicit Game(int n, int max_players = kDefaultMaxTablePlayers);

  // Takes ownership of a complete table. values.size() must be 2^n and
  // values[0] must be zero.
  static Game FromTable(int n, std::vector<Rational> values,
                        int max_players = kDefaultMaxTablePlayers);

  int num_players() const { return n_; }
  std::size_t table_size() const { return values_.size(); }
  Coalition grand_coalition() const { return Coalition::Full(n_); }

  const Rational& operator()(Coalition c) const { return values_[c.bits()]; }
  const Rational& value(std::uint64_t mask) const { return values_[mask]; }
  const Rational& grand_value() const { return values_.back(); }
  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const Game& a, const Game& b) = default;

 private:
  Game(int n, std::vector<Rational> values, bool /*unchecked*/)
      : n_(n), values_(std::move(values)) {}

  int n_;
  std::vector<Rational> values_;
};

// Builds a game from sparse (coalition, value) entries; unlisted coalitions
// are zero.
Game MakeGame(int n, const std::vector<std::pair<Coalition, Rational>>& entries,
              int max_players = kDefaultMaxTablePlayers);

// u_S(T) = 1 iff S is a subset of T.
Game UnanimityGame(int n, Coalition support);

// Pointwise a*g1 + b*g2.
Game GameLinear(const Rational& a, const Game& g1, const Rational& b,
                const Game& g2);

// Sum over S of dividend(S) * u_S.
Game GameFromDividends(
    int n, const std::vector<std::pair<Coalition, Rational>>& dividends,
    int max_players = kDefaultMaxTablePlayers);

// Harsanyi dividends indexed by coalition mask (entry 0 is always zero).
// Computed by Moebius inversion over the subset lattice, O(n 2^n).
std::vector<Rational> HarsanyiDividends(const Game& game);

// Shapley value via equal division of every dividend among its members.
RationalVector ShapleyExact(const Game& game);

// Shapley value matrix: entry (i, j) sums dividend(S) / |S|^2 over all S
// containing both i and j. Symmetric; row i sums to the Shapley value of i.
RationalMatrix ShapleyMatrixExact(const Game& game);

// Supermodularity over all coalition pairs for n <= 13, otherwise the
// marginal-contribution definition.
bool IsConvex(const Game& game);
bool IsConvexSupermodular(const Game& game);
bool IsConvexMarginal(const Game& game);

bool IsPositive(const Game& game);

// v(S) < |S| for every nonempty S.
bool IsSizeBounded(const Game& game);

// Efficient and coalitionally rational. Throws kLengthMismatch.
bool InCore(const Game& game, const RationalVector& payoff);
bool InCore(const Game& game, const IntVector& payoff);

// Sum of x over the members of c.
Rational CoalitionSum(const RationalVector& x, Coalition c);

struct Reduction {
  Game game;
  // kept[k] is the index, in the input game, of player k of the result.
  std::vector<int> kept;
};

// The c-reduced game on N \ {player}: pays `player` the amount c and lets every
// other coalition optionally absorb that player at price c. Surviving players
// are renumbered densely in ascending order.
Reduction ReducedGame(const Game& game, int player, const Rational& c);

// Removes bit `player` from mask and shifts higher bits down by one.
constexpr std::uint64_t DropBit(std::uint64_t mask, int player) {
  const std::uint64_t low = mask & ((std::uint64_t{1} << player) - 1);
  return low | ((mask >> (player + 1)) << player);
}

}  // namespace isv

#endif  // ISV_GAME_H_
