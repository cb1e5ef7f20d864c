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

#ifndef ISV_FIXTURES_H_
#define ISV_FIXTURES_H_

#include "isv/apportionment.h"
#include "isv/game.h"
#include "isv/matching.h"
#include "isv/rng.h"

namespace isv {

// Random instance generators. Every generator is a pure function of the
// generator state, so a fixed seed reproduces the same instances everywhere.

// Each nonempty coalition gets a dividend with probability 1/2, drawn from
// p/q with |p| <= 4, 1 <= q <= 4.
Game RandomDividendGame(int n, SplitMix64& rng);

// Nonnegative integer dividends in 0..max_dividend on a random half of the
// coalitions of size >= 1. Positive, hence convex, with integer values.
Game RandomPositiveIntegerGame(int n, SplitMix64& rng, int max_dividend = 3);

// Convex integer game with both convexity and the integer property but not
// necessarily positive: positive integer dividends plus a sum of
// c * max(0, |S| - t) terms (supermodular in |S|) plus additive weights.
Game RandomConvexIntegerGame(int n, SplitMix64& rng);

// Convex, integer and size-bounded (v(S) < |S| for nonempty S), found by
// rejection over sparse integer dividends on coalitions of size >= 2.
Game RandomSizeBoundedConvexGame(int n, SplitMix64& rng);

// Game with fractional interior values and v(N) a nonnegative integer.
// Convex draws are rejected when n >= 2; every one-player game is convex.
Game RandomFractionalGame(int n, SplitMix64& rng);

// Positive game with dividends in [0, 1] on a grid of 1/100, then scaled so
// v(N) equals `total` exactly. Requires at least one nonzero dividend, which
// is forced on the grand coalition when the draw is empty.
Game RandomPositiveGame(int n, SplitMix64& rng, long long total);

OwnerList RandomOwnerList(int n, int objects, SplitMix64& rng);

ApprovalProfile RandomApprovalProfile(int parties, int ballots,
                                      SplitMix64& rng);

RegionalVotes RandomRegionalVotes(int parties, int regions, SplitMix64& rng);

}  // namespace isv

#endif  // ISV_FIXTURES_H_
