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

#include "isv/isv.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

#include "isv/error.h"

namespace isv {

TieBreakOrder RemainderOrder(const RationalVector& sv) {
  std::vector<Rational> rem;
  rem.reserve(sv.size());
  for (const Rational& x : sv) rem.push_back(Remainder(x));
  TieBreakOrder order(sv.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&rem](int a, int b) { return rem[a] > rem[b]; });
  return order;
}

std::string ToString(const IsvEvent& event) {
  const std::string player = std::to_string(event.player);
  switch (event.kind) {
    case IsvEvent::Kind::kFloorAssigned:
      return "floor " + player + " " + std::to_string(event.amount);
    case IsvEvent::Kind::kRemovedZero:
      return "removed " + player;
    case IsvEvent::Kind::kGrantedUnit:
      return "granted " + player;
  }
  return "?";
}

namespace {

// The game (M, u) of the grant loop. Players are kept as input-game labels in
// ascending order; once every player is gone only the residual grand value
// remains.
class WorkingGame {
 public:
  WorkingGame(Game game, int n)
      : game_(std::move(game)), grand_(game_->grand_value()) {
    players_.resize(n);
    std::iota(players_.begin(), players_.end(), 0);
  }

  bool empty() const { return players_.empty(); }
  const Game& game() const { return *game_; }
  const std::vector<int>& players() const { return players_; }
  const Rational& grand() const { return grand_; }

  // Local index of an input-game label, or -1 when already removed.
  int LocalIndex(int label) const {
    auto it = std::lower_bound(players_.begin(), players_.end(), label);
    if (it == players_.end() || *it != label) return -1;
    return static_cast<int>(it - players_.begin());
  }

  void Reduce(int local, const Rational& c) {
    if (players_.size() == 1) {
      grand_ -= c;
      players_.clear();
      game_.reset();
      return;
    }
    Reduction r = ReducedGame(*game_, local, c);
    game_ = std::move(r.game);
    players_.erase(players_.begin() + local);
    grand_ = game_->grand_value();
  }

  void FloorValues() {
    std::vector<Rational> values = game_->values();
    for (Rational& x : values) x = Rational(Floor(x));
    const int n = game_->num_players();
    game_ = Game::FromTable(n, std::move(values), n);
    grand_ = game_->grand_value();
  }

 private:
  std::optional<Game> game_;
  Rational grand_;
  std::vector<int> players_;
};

}  // namespace

IsvResult IndivisibleShapley(const Game& game, const IsvOptions& options) {
  const int n = game.num_players();
  if (n > options.max_players) {
    throw Error(ErrorCode::kTooManyPlayers,
                std::to_string(n) + " players exceed the cap of " +
                    std::to_string(options.max_players));
  }
  if (!IsInteger(game.grand_value()) || sgn(game.grand_value()) < 0) {
    throw Error(ErrorCode::kNotIndivisible,
                "v(N) = " + ToString(game.grand_value()) +
                    " is not a natural number");
  }

  const RationalVector sv = ShapleyExact(game);
  const TieBreakOrder order = RemainderOrder(sv);

  IsvResult result;
  std::vector<Integer> floors(n);
  result.payoffs.resize(n);
  for (int i = 0; i < n; ++i) {
    floors[i] = Floor(sv[i]);
    result.payoffs[i] = ToInt64(floors[i]);
    result.trace.push_back(
        {i, IsvEvent::Kind::kFloorAssigned, result.payoffs[i]});
  }

  // u(S) = v(S) - sum of floors over S.
  std::vector<Rational> values = game.values();
  std::vector<Integer> floor_sum(values.size());
  floor_sum[0] = 0;
  for (std::uint64_t mask = 1; mask < values.size(); ++mask) {
    floor_sum[mask] =
        floor_sum[mask & (mask - 1)] + floors[std::countr_zero(mask)];
    values[mask] -= floor_sum[mask];
  }
  WorkingGame work(Game::FromTable(n, std::move(values), n), n);

  for (int i = 0; i < n; ++i) {
    if (!IsInteger(sv[i])) continue;
    work.Reduce(work.LocalIndex(i), Rational(0));
    result.trace.push_back({i, IsvEvent::Kind::kRemovedZero, 0});
  }
  if (!work.empty()) work.FloorValues();

  auto record = [&]() {
    if (options.record_stages && !work.empty()) {
      result.stages.push_back({work.game(), work.players()});
    }
  };
  record();

  while (sgn(work.grand()) > 0) {
    if (work.empty()) {
      throw std::logic_error("grant loop ran out of players with value " +
                             ToString(work.grand()) + " left");
    }
    const Game& u = work.game();
    const std::uint64_t all = u.grand_coalition().bits();
    std::optional<RationalVector> local_sv;
    int chosen = -1;
    for (int label : order) {
      const int local = work.LocalIndex(label);
      if (local < 0) continue;
      const std::uint64_t rest = all & ~(std::uint64_t{1} << local);
      if (u.grand_value() >= u.value(rest) + 1) {
        chosen = local;
        break;
      }
      if (!local_sv) local_sv = ShapleyExact(u);
      if (sgn((*local_sv)[local]) > 0) {
        chosen = local;
        break;
      }
    }
    if (chosen < 0) {
      throw std::logic_error("no player is eligible for a unit with value " +
                             ToString(work.grand()) + " left");
    }
    const int label = work.players()[chosen];
    work.Reduce(chosen, Rational(1));
    ++result.payoffs[label];
    result.trace.push_back({label, IsvEvent::Kind::kGrantedUnit, 1});
    record();
  }
  return result;
}

std::vector<IntVector> QuotaCoreVectors(const Game& game) {
  std::vector<IntVector> out;
  const Rational& total = game.grand_value();
  if (!IsInteger(total)) return out;
  const int n = game.num_players();
  const RationalVector sv = ShapleyExact(game);
  IntVector base(n);
  std::vector<int> fractional;
  long long floor_total = 0;
  for (int i = 0; i < n; ++i) {
    base[i] = ToInt64(Floor(sv[i]));
    floor_total += base[i];
    if (!IsInteger(sv[i])) fractional.push_back(i);
  }
  const long long extra = ToInt64(total.get_num()) - floor_total;
  const int f = static_cast<int>(fractional.size());
  if (extra < 0 || extra > f) return out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << f); ++pick) {
    if (std::popcount(pick) != extra) continue;
    IntVector x = base;
    for (int k = 0; k < f; ++k) {
      if ((pick >> k) & 1) ++x[fractional[k]];
    }
    if (InCore(game, x)) out.push_back(std::move(x));
  }
  return out;
}

IntVector IsvOracleConvex(const Game& game) {
  const std::vector<IntVector> candidates = QuotaCoreVectors(game);
  if (candidates.empty()) {
    throw Error(ErrorCode::kEmptyFeasibleSet,
                "no integer core vector respects the Shapley quotas");
  }
  const TieBreakOrder order = RemainderOrder(ShapleyExact(game));
  auto lex_less = [&order](const IntVector& a, const IntVector& b) {
    for (int p : order) {
      if (a[p] != b[p]) return a[p] < b[p];
    }
    return false;
  };
  return *std::max_element(candidates.begin(), candidates.end(), lex_less);
}

Rational LpDistance(const IntVector& x, const RationalVector& sv, int p) {
  if (x.size() != sv.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(x.size()) + " vs " + std::to_string(sv.size()));
  }
  if (p < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "p must be positive, got " + std::to_string(p));
  }
  Rational total(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rational diff = abs(sv[i] - Rational(static_cast<long>(x[i])));
    Rational term(1);
    for (int k = 0; k < p; ++k) term *= diff;
    total += term;
  }
  return total;
}

}  // namespace isv
