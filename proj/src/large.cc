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

#include "isv/large.h"

#include <algorithm>
#include <string>

#include "isv/error.h"

namespace isv {
namespace {

void CheckShape(std::size_t n, const ShapleyMatrix& synergy) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "no players");
  if (synergy.size() != n) {
    throw Error(ErrorCode::kLengthMismatch,
                "synergy matrix has " + std::to_string(synergy.size()) +
                    " rows for " + std::to_string(n) + " players");
  }
  for (const auto& row : synergy) {
    if (row.size() != n) {
      throw Error(ErrorCode::kLengthMismatch,
                  "synergy row of length " + std::to_string(row.size()) +
                      " for " + std::to_string(n) + " players");
    }
  }
}

std::size_t ArgMax(const std::vector<double>& values) {
  return static_cast<std::size_t>(
      std::max_element(values.begin(), values.end()) - values.begin());
}

}  // namespace

Attributions NormalizeAttributions(const std::vector<double>& values,
                                   const ShapleyMatrix& synergy,
                                   double target_total) {
  const std::size_t n = values.size();
  CheckShape(n, synergy);
  if (!(target_total > 0)) {
    throw Error(ErrorCode::kInvalidArgument, "target total must be positive");
  }
  const double shift =
      std::max(0.0, -*std::min_element(values.begin(), values.end()));
  Attributions out{values, synergy};
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] += shift;
    out.synergy[i][i] += shift;
    sum += out.values[i];
  }
  if (sum == 0.0) {
    throw Error(ErrorCode::kDegenerateTotal,
                "attributions sum to zero after the shift");
  }
  const double scale = target_total / sum;
  double scaled_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] *= scale;
    scaled_sum += out.values[i];
    for (double& x : out.synergy[i]) x *= scale;
  }
  out.values[ArgMax(out.values)] -= scaled_sum - target_total;
  return out;
}

LargeResult IsvLargeTraced(const std::vector<double>& values,
                           const ShapleyMatrix& synergy, long long total,
                           double alpha) {
  const std::size_t n = values.size();
  CheckShape(n, synergy);
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::kAlphaOutOfRange,
                "alpha = " + std::to_string(alpha) + " outside [0, 1]");
  }
  if (total < 0) {
    throw Error(ErrorCode::kInvalidArgument, "total must be nonnegative");
  }

  LargeResult out;
  out.grants.assign(n, 0);
  std::vector<double> phi = values;
  for (long long step = 0; step < total; ++step) {
    const std::size_t i = ArgMax(phi);
    ++out.grants[i];
    if (phi[i] > 1.0) {
      phi[i] -= 1.0;
    } else {
      const double deficit = 1.0 - phi[i];
      double row = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i) row += synergy[i][k];
      }
      // The proportional share is undefined for a nonpositive row sum.
      const double proportional = row > 0.0 ? alpha : 0.0;
      // With one player there is nobody to charge and the loop is empty.
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        double share = (1.0 - proportional) / static_cast<double>(n - 1);
        if (row > 0.0) share += proportional * synergy[i][j] / row;
        phi[j] -= deficit * share;
      }
      phi[i] = 0.0;
    }
    out.steps.push_back({static_cast<int>(i), phi});
  }
  return out;
}

IntVector IsvLarge(const std::vector<double>& values,
                   const ShapleyMatrix& synergy, long long total,
                   double alpha) {
  return IsvLargeTraced(values, synergy, total, alpha).grants;
}

IntVector SelectTopK(const ValueOracle& oracle, long long k,
                     const SamplerConfig& config, double alpha) {
  if (k < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "k must be positive, got " + std::to_string(k));
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::kAlphaOutOfRange,
                "alpha = " + std::to_string(alpha) + " outside [0, 1]");
  }
  const std::vector<double> sv = SampleShapley(oracle, config);
  const ShapleyMatrix synergy = SampleShapleyMatrix(oracle, config);
  const Attributions norm =
      NormalizeAttributions(sv, synergy, static_cast<double>(k));
  return IsvLarge(norm.values, norm.synergy, k, alpha);
}

}  // namespace isv
