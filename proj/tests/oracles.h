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

#ifndef ISV_TESTS_ORACLES_H_
#define ISV_TESTS_ORACLES_H_

// Slow reference implementations used to check the library. None of them
// call the library routine they are checking.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "isv/game.h"
#include "isv/rational.h"

namespace isv::testing {

inline Rational Q(long long num, long long den = 1) {
  return ToRational(num, den);
}

inline Game BuildGame(int n, const std::function<Rational(Coalition)>& v) {
  std::vector<Rational> values(std::size_t{1} << n);
  for (std::uint64_t mask = 1; mask < values.size(); ++mask) {
    values[mask] = v(Coalition(mask));
  }
  return Game::FromTable(n, std::move(values));
}

// v(S) = floor(|S| / 2).
inline Game HalfGame(int n) {
  return BuildGame(n, [](Coalition s) { return Q(s.size() / 2); });
}

// 2 u_{012} + u_{34}, written out from the definition of a unanimity game.
inline Game TwoBlocks() {
  return BuildGame(5, [](Coalition s) {
    return Q(2 * Coalition{0, 1, 2}.IsSubsetOf(s) + Coalition{3, 4}.IsSubsetOf(s));
  });
}

inline long long Factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Average marginal contribution over all n! orders.
inline RationalVector PermutationShapley(const Game& g) {
  const int n = g.num_players();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  RationalVector sum(n);
  do {
    Coalition s;
    for (int p : perm) {
      const Coalition next = s.with(p);
      sum[p] += g(next) - g(s);
      s = next;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (Rational& x : sum) x /= Q(Factorial(n));
  return sum;
}

// Delta(S) = v(S) - sum of Delta(T) over proper nonempty subsets T of S.
inline std::vector<Rational> RecursiveDividends(const Game& g) {
  std::vector<Rational> d(g.table_size());
  for (std::uint64_t s = 1; s < d.size(); ++s) {
    Rational rest = 0;
    for (std::uint64_t t = (s - 1) & s; t != 0; t = (t - 1) & s) rest += d[t];
    d[s] = g.value(s) - rest;
  }
  return d;
}

// Sum over S containing i and j of Delta(S) / |S|^2.
inline RationalMatrix DividendMatrix(const Game& g) {
  const int n = g.num_players();
  const std::vector<Rational> d = RecursiveDividends(g);
  RationalMatrix m(n, RationalVector(n));
  for (std::uint64_t s = 1; s < d.size(); ++s) {
    const Coalition c(s);
    const Rational w = d[s] / Q(c.size() * c.size());
    for (int i : c.Members()) {
      for (int j : c.Members()) m[i][j] += w;
    }
  }
  return m;
}

// Marginal contributions grow along every chain S <= T not containing i.
inline bool BruteConvex(const Game& g) {
  const int n = g.num_players();
  const std::uint64_t full = g.grand_coalition().bits();
  for (int i = 0; i < n; ++i) {
    const std::uint64_t others = full & ~(std::uint64_t{1} << i);
    for (std::uint64_t t = others;; t = (t - 1) & others) {
      const Rational mt = g.value(t | (std::uint64_t{1} << i)) - g.value(t);
      for (std::uint64_t s = t;; s = (s - 1) & t) {
        if (g.value(s | (std::uint64_t{1} << i)) - g.value(s) > mt) {
          return false;
        }
        if (s == 0) break;
      }
      if (t == 0) break;
    }
  }
  return true;
}

inline bool BruteInCore(const Game& g, const RationalVector& x) {
  for (std::uint64_t s = 0; s < g.table_size(); ++s) {
    Rational sum = 0;
    for (int p : Coalition(s).Members()) sum += x[p];
    if (sum < g.value(s)) return false;
    if (s + 1 == g.table_size() && sum != g.value(s)) return false;
  }
  return true;
}

inline RationalVector ToRationals(const IntVector& x) {
  RationalVector out;
  for (long long v : x) out.push_back(Q(v));
  return out;
}

// Every integer vector with entries in {floor, ceil} of sv summing to total.
inline std::vector<IntVector> QuotaVectors(const RationalVector& sv,
                                           long long total) {
  const int n = static_cast<int>(sv.size());
  std::vector<IntVector> out;
  IntVector x(n);
  std::function<void(int, long long)> rec = [&](int i, long long sum) {
    if (i == n) {
      if (sum == total) out.push_back(x);
      return;
    }
    const long long lo = ToInt64(Floor(sv[i]));
    const long long hi = ToInt64(Ceil(sv[i]));
    for (long long v = lo; v <= hi; ++v) {
      x[i] = v;
      rec(i + 1, sum + v);
    }
  };
  rec(0, 0);
  return out;
}

// Every integer vector 0 <= x_i <= v(N) summing to v(N) that lies in the core.
inline std::vector<IntVector> IntegerCore(const Game& g) {
  const int n = g.num_players();
  const long long total = ToInt64(Floor(g.grand_value()));
  std::vector<IntVector> out;
  IntVector x(n);
  std::function<void(int, long long)> rec = [&](int i, long long left) {
    if (i == n - 1) {
      x[i] = left;
      if (BruteInCore(g, ToRationals(x))) out.push_back(x);
      return;
    }
    for (long long v = 0; v <= left; ++v) {
      x[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (IsInteger(g.grand_value()) && total >= 0) rec(0, total);
  return out;
}

// Seats from the `seats` largest quotients votes/d, d = 1..seats; ties go to
// the larger vote total, then the lower index.
inline IntVector BruteDhondt(const std::vector<long long>& votes,
                             long long seats) {
  struct Quotient {
    long long votes;
    long long divisor;
    int party;
  };
  std::vector<Quotient> all;
  for (int p = 0; p < static_cast<int>(votes.size()); ++p) {
    for (long long d = 1; d <= seats; ++d) all.push_back({votes[p], d, p});
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const Quotient& a, const Quotient& b) {
                     const Rational qa = Q(a.votes, a.divisor);
                     const Rational qb = Q(b.votes, b.divisor);
                     if (qa != qb) return qa > qb;
                     if (a.votes != b.votes) return a.votes > b.votes;
                     if (a.party != b.party) return a.party < b.party;
                     return a.divisor < b.divisor;
                   });
  IntVector out(votes.size());
  for (long long k = 0; k < seats; ++k) ++out[all[k].party];
  return out;
}

}  // namespace isv::testing

#endif  // ISV_TESTS_ORACLES_H_
