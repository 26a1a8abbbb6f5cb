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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "leakaudit/audit/records.h"

namespace leakaudit {

absl::StatusOr<std::vector<ThresholdStat>> SweepThresholds(
    std::span<const ScoreRecord> records) {
  if (records.empty()) {
    return absl::InvalidArgumentError("cannot sweep thresholds over no records");
  }
  int64_t members = 0;
  for (const ScoreRecord& r : records) {
    if (!std::isfinite(r.score)) {
      return absl::InvalidArgumentError(
          absl::StrCat("record '", r.id, "' has a non-finite score"));
    }
    members += r.member ? 1 : 0;
  }
  if (members == 0) {
    return absl::InvalidArgumentError(
        "no member records; recall is undefined");
  }

  std::vector<size_t> order(records.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return records[a].score > records[b].score;
  });

  std::vector<ThresholdStat> stats;
  int64_t guesses = 0;
  int64_t tp = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    const ScoreRecord& r = records[order[i]];
    ++guesses;
    tp += r.member ? 1 : 0;
    const bool last_of_value =
        i + 1 == order.size() || records[order[i + 1]].score != r.score;
    if (!last_of_value) continue;
    stats.push_back({
        .tau = r.score,
        .guesses = guesses,
        .true_positives = tp,
        .precision = static_cast<double>(tp) / static_cast<double>(guesses),
        .recall = static_cast<double>(tp) / static_cast<double>(members),
    });
  }
  return stats;
}

}  // namespace leakaudit
