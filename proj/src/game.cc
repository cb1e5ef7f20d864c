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

#include "isv/game.h"

#include <string>

#include "isv/error.h"

namespace isv {
namespace {

void CheckPlayerCount(int n, int max_players) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "a game needs at least one player, got " + std::to_string(n));
  }
  if (n > max_players) {
    throw Error(ErrorCode::kTooManyPlayers,
                std::to_string(n) + " players exceed the full-table cap of " +
                    std::to_string(max_players));
  }
}

void CheckCoalition(int n, Coalition c) {
  if (c.Span() > n) {
    throw Error(ErrorCode::kPlayerOutOfRange,
                "coalition {" + c.ToString() + "} has a player outside 0.." +
                    std::to_string(n - 1));
  }
}

// In-place zeta transform: f(S) <- sum of f(T) over T subset of S.
void SubsetSum(std::vector<Rational>& f, int n) {
  for (int bit = 0; bit < n; ++bit) {
    const std::uint64_t b = std::uint64_t{1} << bit;
    for (std::uint64_t mask = 0; mask < f.size(); ++mask) {
      if (mask & b) f[mask] += f[mask ^ b];
    }
  }
}

}  // namespace

Game::Game(int n, int max_players) : n_(n) {
  CheckPlayerCount(n, max_players);
  values_.assign(std::size_t{1} << n, Rational(0));
}

Game Game::FromTable(int n, std::vector<Rational> values, int max_players) {
  CheckPlayerCount(n, max_players);
  if (values.size() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::kLengthMismatch,
                "table has " + std::to_string(values.size()) +
                    " entries, expected 2^" + std::to_string(n));
  }
  if (values[0] != 0) {
    throw Error(ErrorCode::kNonzeroEmptySet,
                "v(empty) = " + ToString(values[0]));
  }
  return Game(n, std::move(values), true);
}

Game MakeGame(int n, const std::vector<std::pair<Coalition, Rational>>& entries,
              int max_players) {
  CheckPlayerCount(n, max_players);
  std::vector<Rational> values(std::size_t{1} << n, Rational(0));
  std::vector<bool> seen(values.size(), false);
  for (const auto& [coalition, value] : entries) {
    CheckCoalition(n, coalition);
    if (coalition.empty() && value != 0) {
      throw Error(ErrorCode::kNonzeroEmptySet,
                  "the empty coalition was given value " + ToString(value));
    }
    if (seen[coalition.bits()]) {
      throw Error(ErrorCode::kDuplicateCoalition,
                  "coalition {" + coalition.ToString() + "} listed twice");
    }
    seen[coalition.bits()] = true;
    values[coalition.bits()] = value;
  }
  return Game::FromTable(n, std::move(values), max_players);
}

Game UnanimityGame(int n, Coalition support) {
  if (support.empty()) {
    throw Error(ErrorCode::kEmptySupportCoalition,
                "unanimity game needs a nonempty support");
  }
  CheckCoalition(n, support);
  return GameFromDividends(n, {{support, Rational(1)}});
}

Game GameLinear(const Rational& a, const Game& g1, const Rational& b,
                const Game& g2) {
  if (g1.num_players() != g2.num_players()) {
    throw Error(ErrorCode::kPlayerCountMismatch,
                std::to_string(g1.num_players()) + " vs " +
                    std::to_string(g2.num_players()) + " players");
  }
  std::vector<Rational> values(g1.table_size());
  for (std::size_t s = 0; s < values.size(); ++s) {
    values[s] = a * g1.value(s) + b * g2.value(s);
  }
  return Game::FromTable(g1.num_players(), std::move(values),
                         g1.num_players());
}

Game GameFromDividends(
    int n, const std::vector<std::pair<Coalition, Rational>>& dividends,
    int max_players) {
  CheckPlayerCount(n, max_players);
  std::vector<Rational> values(std::size_t{1} << n, Rational(0));
  for (const auto& [coalition, dividend] : dividends) {
    CheckCoalition(n, coalition);
    if (coalition.empty()) {
      throw Error(ErrorCode::kEmptySupportCoalition,
                  "the empty coalition cannot carry a dividend");
    }
    values[coalition.bits()] += dividend;
  }
  SubsetSum(values, n);
  return Game::FromTable(n, std::move(values), max_players);
}

std::vector<Rational> HarsanyiDividends(const Game& game) {
  std::vector<Rational> d = game.values();
  for (int bit = 0; bit < game.num_players(); ++bit) {
    const std::uint64_t b = std::uint64_t{1} << bit;
    for (std::uint64_t mask = 0; mask < d.size(); ++mask) {
      if (mask & b) d[mask] -= d[mask ^ b];
    }
  }
  return d;
}

RationalVector ShapleyExact(const Game& game) {
  const std::vector<Rational> d = HarsanyiDividends(game);
  RationalVector sv(game.num_players(), Rational(0));
  Rational share;
  for (std::uint64_t mask = 1; mask < d.size(); ++mask) {
    if (d[mask] == 0) continue;
    const Coalition s(mask);
    share = d[mask] / s.size();
    for (int i : s.Members()) sv[i] += share;
  }
  return sv;
}

RationalMatrix ShapleyMatrixExact(const Game& game) {
  const int n = game.num_players();
  const std::vector<Rational> d = HarsanyiDividends(game);
  RationalMatrix m(n, RationalVector(n, Rational(0)));
  Rational share;
  for (std::uint64_t mask = 1; mask < d.size(); ++mask) {
    if (d[mask] == 0) continue;
    const Coalition s(mask);
    const int size = s.size();
    share = d[mask] / (size * size);
    const std::vector<int> members = s.Members();
    for (int i : members) {
      for (int j : members) m[i][j] += share;
    }
  }
  return m;
}

bool IsConvexSupermodular(const Game& game) {
  const std::uint64_t size = game.table_size();
  Rational lhs, rhs;
  for (std::uint64_t a = 0; a < size; ++a) {
    for (std::uint64_t b = a + 1; b < size; ++b) {
      // Nested pairs satisfy the inequality with equality.
      if ((a & b) == a || (a & b) == b) continue;
      lhs = game.value(a) + game.value(b);
      rhs = game.value(a | b) + game.value(a & b);
      if (lhs > rhs) return false;
    }
  }
  return true;
}

bool IsConvexMarginal(const Game& game) {
  // Marginals of i must not decrease along any single-player extension of S;
  // chaining such steps covers every S subset of T.
  const int n = game.num_players();
  const std::uint64_t size = game.table_size();
  std::vector<Rational> marginal(size);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t bi = std::uint64_t{1} << i;
    for (std::uint64_t s = 0; s < size; ++s) {
      if (!(s & bi)) marginal[s] = game.value(s | bi) - game.value(s);
    }
    for (std::uint64_t s = 0; s < size; ++s) {
      if (s & bi) continue;
      for (int j = 0; j < n; ++j) {
        const std::uint64_t bj = std::uint64_t{1} << j;
        if (j == i || (s & bj)) continue;
        if (marginal[s] > marginal[s | bj]) return false;
      }
    }
  }
  return true;
}

bool IsConvex(const Game& game) {
  if (game.num_players() <= 13) return IsConvexSupermodular(game);
  return IsConvexMarginal(game);
}

bool IsPositive(const Game& game) {
  for (const Rational& d : HarsanyiDividends(game)) {
    if (sgn(d) < 0) return false;
  }
  return true;
}

bool IsSizeBounded(const Game& game) {
  for (std::uint64_t mask = 1; mask < game.table_size(); ++mask) {
    if (game.value(mask) >= Coalition(mask).size()) return false;
  }
  return true;
}

Rational CoalitionSum(const RationalVector& x, Coalition c) {
  Rational sum(0);
  for (int i : c.Members()) sum += x[i];
  return sum;
}

bool InCore(const Game& game, const RationalVector& payoff) {
  if (static_cast<int>(payoff.size()) != game.num_players()) {
    throw Error(ErrorCode::kLengthMismatch,
                "payoff has " + std::to_string(payoff.size()) +
                    " entries for a " + std::to_string(game.num_players()) +
                    "-player game");
  }
  // x(S) built incrementally from x(S minus its lowest member).
  std::vector<Rational> sums(game.table_size());
  sums[0] = 0;
  for (std::uint64_t mask = 1; mask < sums.size(); ++mask) {
    const int low = std::countr_zero(mask);
    sums[mask] = sums[mask & (mask - 1)] + payoff[low];
    if (sums[mask] < game.value(mask)) return false;
  }
  return sums.back() == game.grand_value();
}

bool InCore(const Game& game, const IntVector& payoff) {
  RationalVector x;
  x.reserve(payoff.size());
  for (long long v : payoff) x.emplace_back(static_cast<long>(v));
  return InCore(game, x);
}

Reduction ReducedGame(const Game& game, int player, const Rational& c) {
  const int n = game.num_players();
  if (player < 0 || player >= n) {
    throw Error(ErrorCode::kPlayerOutOfRange,
                "player " + std::to_string(player) + " not in 0.." +
                    std::to_string(n - 1));
  }
  if (sgn(c) < 0) {
    throw Error(ErrorCode::kNegativePayoff, "payoff " + ToString(c) + " < 0");
  }
  if (n == 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot remove the only player of a game");
  }
  const std::uint64_t bit = std::uint64_t{1} << player;
  const std::uint64_t rest = game.grand_coalition().bits() & ~bit;
  std::vector<Rational> values(std::size_t{1} << (n - 1));
  for (std::uint64_t s = rest; ; s = (s - 1) & rest) {
    Rational& out = values[DropBit(s, player)];
    if (s == rest) {
      out = game.grand_value() - c;
    } else if (s != 0) {
      out = game.value(s | bit) - c;
      if (game.value(s) > out) out = game.value(s);
    }
    if (s == 0) break;
  }
  Reduction r{Game::FromTable(n - 1, std::move(values), n - 1), {}};
  for (int k = 0; k < n; ++k) {
    if (k != player) r.kept.push_back(k);
  }
  return r;
}

}  // namespace isv
