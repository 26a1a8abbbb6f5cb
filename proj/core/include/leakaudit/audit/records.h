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

#ifndef LEAKAUDIT_AUDIT_RECORDS_H_
#define LEAKAUDIT_AUDIT_RECORDS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"

namespace leakaudit {

// One audit example: a membership score (larger means more member-like) and
// the secret coin that decided whether the example is a real member.
struct ScoreRecord {
  std::string id;
  double score = 0.0;
  bool member = false;

  friend bool operator==(const ScoreRecord&, const ScoreRecord&) = default;
};

// Counts for the guess vector "member iff score >= tau".
struct ThresholdStat {
  double tau = 0.0;
  int64_t guesses = 0;
  int64_t true_positives = 0;
  double precision = 0.0;
  double recall = 0.0;

  friend bool operator==(const ThresholdStat&, const ThresholdStat&) = default;
};

// One stat per distinct score, sorted by descending tau. Fails on empty input,
// non-finite scores, or when no record is a member.
absl::StatusOr<std::vector<ThresholdStat>> SweepThresholds(
    std::span<const ScoreRecord> records);

}  // namespace leakaudit

#endif  // LEAKAUDIT_AUDIT_RECORDS_H_
