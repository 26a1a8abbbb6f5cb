// Copyright 2026 The leakaudit Authors
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

// Black-box single-run auditor used as a comparison point. Scores are target
// model losses: low loss suggests membership. Each sample is guessed member
// (score < t_plus), non-member (score > t_minus), or left out. The number of
// correct guesses among the non-abstained ones is tested against a
// Bernoulli(e^eps / (1 + e^eps)) randomized-response baseline with delta = 0.

#ifndef LEAKAUDIT_O1_O1_AUDITOR_H_
#define LEAKAUDIT_O1_O1_AUDITOR_H_

#include <cstdint>
#include <span>

#include "absl/status/statusor.h"
#include "leakaudit/audit/records.h"
#include "leakaudit/stats/tail.h"

namespace leakaudit {

struct AbstentionThresholds {
  double t_plus = 0.0;
  double t_minus = 0.0;

  friend bool operator==(const AbstentionThresholds&,
                         const AbstentionThresholds&) = default;
};

struct GuessCounts {
  int64_t guesses = 0;
  int64_t correct = 0;
};

struct O1Result {
  double epsilon = 0.0;
  bool capped = false;
  int64_t guesses = 0;
  int64_t correct = 0;
  AbstentionThresholds thresholds;
  double per_test_level = 0.0;
  int64_t combos_tested = 0;

  friend bool operator==(const O1Result&, const O1Result&) = default;
};

inline constexpr int kDefaultO1GridSize = 50;

// Scores equal to either threshold abstain. Fails if t_plus > t_minus.
absl::StatusOr<GuessCounts> BuildGuesses(std::span<const ScoreRecord> records,
                                         const AbstentionThresholds& t);

// Evaluates every pair t_plus <= t_minus drawn from `grid_size` quantile cut
// points of the observed losses and returns the pair with the largest
// epsilon lower bound. The confidence budget `beta` is split evenly over the
// pairs that make at least one guess.
absl::StatusOr<O1Result> O1Measure(std::span<const ScoreRecord> records,
                                   int grid_size = kDefaultO1GridSize,
                                   double beta = 0.05,
                                   double param_cap = kDefaultParamCap);

}  // namespace leakaudit

#endif  // LEAKAUDIT_O1_O1_AUDITOR_H_
