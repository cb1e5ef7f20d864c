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

#ifndef ISV_LARGE_H_
#define ISV_LARGE_H_

#include <vector>

#include "isv/oracle.h"
#include "isv/rational.h"
#include "isv/sampling.h"

namespace isv {

inline constexpr double kDefaultAlpha = 0.5;

struct Attributions {
  std::vector<double> values;
  ShapleyMatrix synergy;
};

// Shifts all values (and the synergy diagonal) up by max(0, -min value), then
// scales values and every synergy entry so the values sum to target_total.
// Rounding residue is taken off the largest value.
Attributions NormalizeAttributions(const std::vector<double>& values,
                                   const ShapleyMatrix& synergy,
                                   double target_total);

struct LargeStep {
  int player;
  // Working values after the step.
  std::vector<double> values;
};

struct LargeResult {
  IntVector grants;
  std::vector<LargeStep> steps;
};

// Hands out `total` units one at a time to the player with the highest working
// value (lowest index on ties). A pick with value above 1 costs that player 1;
// otherwise its shortfall 1 - value is charged to the others, a fraction alpha
// in proportion to their synergy with the pick and the rest evenly, and the
// pick drops to 0. When the pick's synergy row sums to <= 0 the whole
// shortfall is split evenly.
LargeResult IsvLargeTraced(const std::vector<double>& values,
                           const ShapleyMatrix& synergy, long long total,
                           double alpha);

IntVector IsvLarge(const std::vector<double>& values,
                   const ShapleyMatrix& synergy, long long total,
                   double alpha = kDefaultAlpha);

// Sampled Shapley values and synergy matrix, normalized to sum to k, then
// IsvLarge with total k.
IntVector SelectTopK(const ValueOracle& oracle, long long k,
                     const SamplerConfig& config, double alpha = kDefaultAlpha);

}  // namespace isv

#endif  // ISV_LARGE_H_
