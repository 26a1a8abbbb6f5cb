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

#include "leakaudit/o1/o1_auditor.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "leakaudit/status_macros.h"

namespace leakaudit {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Distinct sorted scores with prefix counts: below[j] counts records whose
// score is among the first j distinct values.
struct CutTable {
  std::vector<double> values;
  std::vector<int64_t> below;
  std::vector<int64_t> members_below;
  int64_t total = 0;
  int64_t members = 0;

  size_t slots() const { return values.size() + 1; }

  // A cut at slot j lies strictly between values[j-1] and values[j].
  double CutValue(size_t j) const {
    if (j == 0) return -kInf;
    if (j == values.size()) return kInf;
    const double lo = values[j - 1];
    return lo + (values[j] - lo) / 2.0;
  }
};

CutTable BuildCutTable(std::span<const ScoreRecord> records) {
  std::vector<std::pair<double, bool>> sorted;
  sorted.reserve(records.size());
  for (const ScoreRecord& r : records) sorted.emplace_back(r.score, r.member);
  std::sort(sorted.begin(), sorted.end());

  CutTable t;
  t.below.push_back(0);
  t.members_below.push_back(0);
  for (size_t i = 0; i < sorted.size(); ++i) {
    ++t.total;
    t.members += sorted[i].second ? 1 : 0;
    if (i + 1 == sorted.size() || sorted[i + 1].first != sorted[i].first) {
      t.values.push_back(sorted[i].first);
      t.below.push_back(t.total);
      t.members_below.push_back(t.members);
    }
  }
  return t;
}

}  // namespace

absl::StatusOr<GuessCounts> BuildGuesses(std::span<const ScoreRecord> records,
                                         const AbstentionThresholds& t) {
  if (!(t.t_plus <= t.t_minus)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "t_plus (", t.t_plus, ") must not exceed t_minus (", t.t_minus, ")"));
  }
  GuessCounts counts;
  for (const ScoreRecord& r : records) {
    if (r.score < t.t_plus) {
      ++counts.guesses;
      counts.correct += r.member ? 1 : 0;
    } else if (r.score > t.t_minus) {
      ++counts.guesses;
      counts.correct += r.member ? 0 : 1;
    }
  }
  return counts;
}

absl::StatusOr<O1Result> O1Measure(std::span<const ScoreRecord> records,
                                   int grid_size, double beta,
                                   double param_cap) {
  if (records.empty()) {
    return absl::InvalidArgumentError("O(1) audit needs at least one record");
  }
  if (grid_size < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("grid size must be at least 2, got ", grid_size));
  }
  if (!(beta > 0.0 && beta < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("beta must lie in (0, 1), got ", beta));
  }
  for (const ScoreRecord& r : records) {
    if (!std::isfinite(r.score)) {
      return absl::InvalidArgumentError(
          absl::StrCat("record '", r.id, "' has a non-finite score"));
    }
  }

  const CutTable table = BuildCutTable(records);
  if (table.values.size() == 1) {
    O1Result degenerate;
    degenerate.per_test_level = beta;
    degenerate.combos_tested = 1;
    return degenerate;
  }

  // Quantile grid over cut slots 0..d, d = number of distinct scores.
  const size_t d = table.values.size();
  std::vector<size_t> grid;
  for (int i = 0; i < grid_size; ++i) {
    const size_t slot = static_cast<size_t>(std::llround(
        static_cast<double>(i) * static_cast<double>(d) / (grid_size - 1)));
    if (grid.empty() || grid.back() != slot) grid.push_back(slot);
  }

  struct Combo {
    size_t plus_slot;
    size_t minus_slot;
    int64_t guesses;
    int64_t correct;
  };
  std::vector<Combo> combos;
  const int64_t nonmembers = table.total - table.members;
  for (size_t a = 0; a < grid.size(); ++a) {
    for (size_t b = a; b < grid.size(); ++b) {
      const size_t pa = grid[a];
      const size_t pb = grid[b];
      const int64_t member_guesses = table.below[pa];
      const int64_t nonmember_guesses = table.total - table.below[pb];
      const int64_t r = member_guesses + nonmember_guesses;
      if (r == 0) continue;
      const int64_t correct = table.members_below[pa] +
                              (nonmembers - (table.below[pb] - table.members_below[pb]));
      combos.push_back({pa, pb, r, correct});
    }
  }

  O1Result best;
  best.combos_tested = static_cast<int64_t>(combos.size());
  if (combos.empty()) {
    best.combos_tested = 1;
    best.per_test_level = beta;
    return best;
  }
  best.per_test_level = beta / static_cast<double>(combos.size());
  const FailureBudget none;
  auto record_witness = [&](const Combo& c) {
    best.guesses = c.guesses;
    best.correct = c.correct;
    best.thresholds = {table.CutValue(c.plus_slot),
                       table.CutValue(c.minus_slot)};
  };
  record_witness(combos.front());
  for (const Combo& c : combos) {
    ASSIGN_OR_RETURN(bool improves,
                     IsRejected(c.correct, c.guesses, best.epsilon,
                                best.per_test_level, none, BoundKind::kExact));
    if (!improves) continue;
    ASSIGN_OR_RETURN(SolvedParam solved,
                     SolveMaxRejectedParam(c.correct, c.guesses,
                                           best.per_test_level, none,
                                           BoundKind::kExact, param_cap));
    if (solved.value > best.epsilon || (solved.capped && !best.capped)) {
      best.epsilon = solved.value;
      best.capped = solved.capped;
      record_witness(c);
    }
    if (best.capped) break;
  }
  return best;
}

}  // namespace leakaudit
