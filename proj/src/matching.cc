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

#include "isv/matching.h"

#include <algorithm>
#include <climits>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

#include "isv/error.h"
#include "isv/isv.h"

namespace isv {

void Validate(const OwnerList& list) {
  if (list.num_players < 1 || list.num_players > kMaxOraclePlayers) {
    throw Error(ErrorCode::kInvalidArgument,
                "player count " + std::to_string(list.num_players) +
                    " outside 1.." + std::to_string(kMaxOraclePlayers));
  }
  for (std::size_t j = 0; j < list.owners.size(); ++j) {
    const Coalition owners = list.owners[j];
    if (owners.empty()) {
      throw Error(ErrorCode::kEmptySupportCoalition,
                  "object " + std::to_string(j) + " has no owner");
    }
    if (owners.Span() > list.num_players) {
      throw Error(ErrorCode::kPlayerOutOfRange,
                  "object " + std::to_string(j) + " is owned by {" +
                      owners.ToString() + "} with only " +
                      std::to_string(list.num_players) + " players");
    }
  }
}

BipartiteState::BipartiteState(int num_objects)
    : match_right_(num_objects, kUnmatched) {}

int BipartiteState::AddLeft(int player, std::vector<int> objects) {
  for (int o : objects) {
    if (o < 0 || o >= num_objects()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "object " + std::to_string(o) + " out of range");
    }
  }
  player_.push_back(player);
  adjacency_.push_back(std::move(objects));
  match_left_.push_back(kUnmatched);
  return num_left() - 1;
}

int BipartiteState::matching_size() const {
  int size = 0;
  for (int o : match_left_) size += (o != kUnmatched);
  return size;
}

void BipartiteState::Match(int left, int object) {
  if (match_left_[left] != kUnmatched || match_right_[object] != kUnmatched) {
    throw Error(ErrorCode::kInvalidArgument, "endpoint already matched");
  }
  const auto& adj = adjacency_[left];
  if (std::find(adj.begin(), adj.end(), object) == adj.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "no edge between left node " + std::to_string(left) +
                    " and object " + std::to_string(object));
  }
  match_left_[left] = object;
  match_right_[object] = left;
}

int HopcroftKarp(BipartiteState& s) {
  constexpr int kInf = INT_MAX;
  const int num_left = s.num_left();
  std::vector<int> dist(num_left);
  // Layer of the left nodes that see a free object on a shortest path.
  int limit = kInf;

  auto bfs = [&]() {
    std::queue<int> queue;
    for (int l = 0; l < num_left; ++l) {
      if (s.match_left_[l] == BipartiteState::kUnmatched) {
        dist[l] = 0;
        queue.push(l);
      } else {
        dist[l] = kInf;
      }
    }
    limit = kInf;
    while (!queue.empty()) {
      const int l = queue.front();
      queue.pop();
      if (dist[l] >= limit) continue;
      for (int o : s.adjacency_[l]) {
        const int m = s.match_right_[o];
        if (m == BipartiteState::kUnmatched) {
          limit = dist[l];
        } else if (dist[m] == kInf) {
          dist[m] = dist[l] + 1;
          queue.push(m);
        }
      }
    }
    return limit != kInf;
  };

  auto dfs = [&](auto& self, int l) -> bool {
    for (int o : s.adjacency_[l]) {
      const int m = s.match_right_[o];
      const bool ok = m == BipartiteState::kUnmatched
                          ? dist[l] == limit
                          : dist[m] == dist[l] + 1 && self(self, m);
      if (ok) {
        s.match_left_[l] = o;
        s.match_right_[o] = l;
        return true;
      }
    }
    dist[l] = kInf;
    return false;
  };

  while (bfs()) {
    for (int l = 0; l < num_left; ++l) {
      if (s.match_left_[l] == BipartiteState::kUnmatched) dfs(dfs, l);
    }
  }
  return s.matching_size();
}

bool AugmentFrom(BipartiteState& s, int left) {
  if (left < 0 || left >= s.num_left() ||
      s.match_left_[left] != BipartiteState::kUnmatched) {
    throw Error(ErrorCode::kInvalidArgument,
                "augmentation must start at an unmatched left node");
  }
  std::vector<bool> visited(s.num_objects(), false);
  auto walk = [&](auto& self, int l) -> bool {
    for (int o : s.adjacency_[l]) {
      if (visited[o]) continue;
      visited[o] = true;
      const int m = s.match_right_[o];
      if (m == BipartiteState::kUnmatched || self(self, m)) {
        s.match_left_[l] = o;
        s.match_right_[o] = l;
        return true;
      }
    }
    return false;
  };
  return walk(walk, left);
}

Game GameFromOwners(const OwnerList& list, int max_players) {
  Validate(list);
  std::vector<std::pair<Coalition, Rational>> dividends;
  std::vector<long> count;
  std::vector<Coalition> distinct;
  for (Coalition c : list.owners) {
    auto it = std::find(distinct.begin(), distinct.end(), c);
    if (it == distinct.end()) {
      distinct.push_back(c);
      count.push_back(1);
    } else {
      ++count[it - distinct.begin()];
    }
  }
  for (std::size_t k = 0; k < distinct.size(); ++k) {
    dividends.emplace_back(distinct[k], Rational(count[k]));
  }
  return GameFromDividends(list.num_players, dividends, max_players);
}

RationalVector ShapleyFromOwners(const OwnerList& list) {
  Validate(list);
  RationalVector sv(list.num_players, Rational(0));
  for (Coalition c : list.owners) {
    const Rational share(1, c.size());
    for (int i : c.Members()) sv[i] += share;
  }
  return sv;
}

Allocation IsvAllocation(const OwnerList& list) {
  const RationalVector sv = ShapleyFromOwners(list);
  const int n = list.num_players;
  const int k = static_cast<int>(list.owners.size());

  std::vector<std::vector<int>> owned(n);
  for (int j = 0; j < k; ++j) {
    for (int i : list.owners[j].Members()) owned[i].push_back(j);
  }

  BipartiteState state(k);
  for (int i = 0; i < n; ++i) {
    const long long copies = ToInt64(Floor(sv[i]));
    for (long long c = 0; c < copies; ++c) state.AddLeft(i, owned[i]);
  }
  if (HopcroftKarp(state) != state.num_left()) {
    throw std::logic_error("floor copies admit no perfect matching");
  }
  for (int i : RemainderOrder(sv)) {
    if (IsInteger(sv[i])) continue;
    AugmentFrom(state, state.AddLeft(i, owned[i]));
  }

  Allocation out;
  out.assignment.resize(k);
  out.counts.assign(n, 0);
  for (int j = 0; j < k; ++j) {
    const int l = state.match_of_object(j);
    if (l == BipartiteState::kUnmatched) {
      throw std::logic_error("object " + std::to_string(j) +
                             " left unallocated");
    }
    out.assignment[j] = state.player_of(l);
    ++out.counts[out.assignment[j]];
  }
  return out;
}

IntVector IsvFromDividends(
    int n, const std::vector<std::pair<Coalition, Rational>>& dividends) {
  OwnerList residue{n, {}};
  IntVector base(n, 0);
  std::set<Coalition> seen;
  for (const auto& [coalition, dividend] : dividends) {
    if (coalition.empty()) {
      throw Error(ErrorCode::kEmptySupportCoalition,
                  "the empty coalition cannot carry a dividend");
    }
    if (coalition.Span() > n) {
      throw Error(ErrorCode::kPlayerOutOfRange,
                  "coalition {" + coalition.ToString() + "} exceeds " +
                      std::to_string(n) + " players");
    }
    if (!seen.insert(coalition).second) {
      throw Error(ErrorCode::kDuplicateCoalition,
                  "coalition {" + coalition.ToString() + "} listed twice");
    }
    if (sgn(dividend) < 0) {
      throw Error(ErrorCode::kNegativeDividend,
                  "dividend of {" + coalition.ToString() + "} is " +
                      ToString(dividend));
    }
    const int size = coalition.size();
    const Integer each = Floor(dividend / size);
    const Rational left = dividend - Rational(each * size);
    if (!IsInteger(left)) {
      throw Error(ErrorCode::kNonIntegerResidue,
                  "dividend " + ToString(dividend) + " of {" +
                      coalition.ToString() + "} leaves residue " +
                      ToString(left));
    }
    const long long per_player = ToInt64(each);
    for (int i : coalition.Members()) base[i] += per_player;
    for (long long r = ToInt64(left.get_num()); r > 0; --r) {
      residue.owners.push_back(coalition);
    }
  }
  Validate(residue);
  const Allocation alloc = IsvAllocation(residue);
  for (int i = 0; i < n; ++i) base[i] += alloc.counts[i];
  return base;
}

}  // namespace isv
