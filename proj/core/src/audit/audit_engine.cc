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

#include "leakaudit/audit/audit_engine.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "absl/container/flat_hash_map.h"
#include "absl/strings/str_cat.h"
#include "leakaudit/status_macros.h"

namespace leakaudit {
namespace {

bool InWindow(const ThresholdStat& s, const RecallWindow& w) {
  return s.recall >= w.min && s.recall <= w.max;
}

struct TestPlan {
  std::vector<ThresholdStat> stats;  // in-window only
  double per_test_level = 0.0;
  FailureBudget budget;
};

absl::StatusOr<TestPlan> PlanTests(std::span<const ScoreRecord> records,
                                   const AuditConfig& config, TestMode mode) {
  RETURN_IF_ERROR(config.Validate());
  ASSIGN_OR_RETURN(std::vector<ThresholdStat> all, SweepThresholds(records));
  TestPlan plan;
  for (const ThresholdStat& s : all) {
    if (InWindow(s, config.recall_window)) plan.stats.push_back(s);
  }
  if (plan.stats.empty()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "no thresholds with recall inside the window [",
        config.recall_window.min, ", ", config.recall_window.max, "]"));
  }
  const int64_t m = static_cast<int64_t>(records.size());
  double tests = 1.0;
  if (config.union_bound) {
    tests = config.union_denominator == UnionDenominator::kAuditSize
                ? static_cast<double>(m)
                : static_cast<double>(plan.stats.size());
  }
  plan.per_test_level = config.beta / (2.0 * tests);
  plan.budget = FailureBudgetFor(config, mode, m);
  return plan;
}

}  // namespace

absl::Status AuditConfig::Validate() const {
  if (!(beta > 0.0 && beta < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("beta must lie in (0, 1), got ", beta));
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("gamma must lie in [0, 1], got ", gamma));
  }
  if (!(delta >= 0.0 && delta <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("delta must lie in [0, 1], got ", delta));
  }
  if (!(recall_window.min >= 0.0 && recall_window.min <= recall_window.max &&
        recall_window.max <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("recall window [", recall_window.min, ", ",
                     recall_window.max, "] must be a nonempty subset of [0, 1]"));
  }
  if (!(param_cap > 0.0) || !std::isfinite(param_cap)) {
    return absl::InvalidArgumentError(
        absl::StrCat("param cap must be positive and finite, got ", param_cap));
  }
  return absl::OkStatus();
}

std::string_view TestModeName(TestMode mode) {
  return mode == TestMode::kBaseline ? "baseline" : "mia";
}

FailureBudget FailureBudgetFor(const AuditConfig& config, TestMode mode,
                               int64_t audit_size) {
  const double m = static_cast<double>(audit_size);
  const double g = config.gamma;
  const double d = config.delta;
  double mean = 2.0 * m * g;
  if (d > 0.0) {
    if (mode == TestMode::kMia) {
      mean = 2.0 * m * (g + d - g * d);
    } else if (config.baseline_budget_from_delta) {
      mean = 2.0 * m * d;
    }
  }
  return {.mean_cap = std::min(mean, m), .support_cap = audit_size};
}

absl::StatusOr<BoundEstimate> EstimateBound(std::span<const ScoreRecord> records,
                                            const AuditConfig& config,
                                            TestMode mode) {
  ASSIGN_OR_RETURN(TestPlan plan, PlanTests(records, config, mode));
  BoundEstimate best;
  best.per_test_level = plan.per_test_level;
  best.tests_performed = static_cast<int64_t>(plan.stats.size());
  const ThresholdStat& first = plan.stats.front();
  best.witness_threshold = first.tau;
  best.witness_recall = first.recall;
  best.witness_guesses = first.guesses;
  best.witness_tp = first.true_positives;

  for (const ThresholdStat& s : plan.stats) {
    // A threshold can only improve on the current best if it already rejects
    // that value; the tail is monotone in the parameter.
    ASSIGN_OR_RETURN(bool improves,
                     IsRejected(s.true_positives, s.guesses, best.value,
                                plan.per_test_level, plan.budget,
                                config.bound_kind));
    if (!improves) continue;
    ASSIGN_OR_RETURN(SolvedParam solved,
                     SolveMaxRejectedParam(s.true_positives, s.guesses,
                                           plan.per_test_level, plan.budget,
                                           config.bound_kind, config.param_cap));
    if (solved.value > best.value || (solved.capped && !best.capped)) {
      best.value = solved.value;
      best.capped = solved.capped;
      best.witness_threshold = s.tau;
      best.witness_recall = s.recall;
      best.witness_guesses = s.guesses;
      best.witness_tp = s.true_positives;
    }
    if (best.capped) break;
  }
  return best;
}

absl::StatusOr<AuditResult> Measure(std::span<const ScoreRecord> baseline,
                                    std::span<const ScoreRecord> mia,
                                    const AuditConfig& config) {
  if (baseline.size() != mia.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("alignment error: baseline has ", baseline.size(),
                     " records but mia has ", mia.size()));
  }
  absl::flat_hash_map<std::string, bool> bits;
  bits.reserve(baseline.size());
  for (const ScoreRecord& r : baseline) {
    if (!bits.emplace(r.id, r.member).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("alignment error: duplicate baseline id '", r.id, "'"));
    }
  }
  absl::flat_hash_map<std::string, bool> seen;
  for (const ScoreRecord& r : mia) {
    auto it = bits.find(r.id);
    if (it == bits.end()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "alignment error: mia id '", r.id, "' missing from baseline"));
    }
    if (it->second != r.member) {
      return absl::InvalidArgumentError(absl::StrCat(
          "alignment error: membership bit differs for id '", r.id, "'"));
    }
    if (!seen.emplace(r.id, true).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("alignment error: duplicate mia id '", r.id, "'"));
    }
  }

  AuditResult result;
  result.config = config;
  ASSIGN_OR_RETURN(result.c_lb,
                   EstimateBound(baseline, config, TestMode::kBaseline));
  ASSIGN_OR_RETURN(result.c_plus_eps_lb,
                   EstimateBound(mia, config, TestMode::kMia));
  result.eps_tilde =
      std::max(0.0, result.c_plus_eps_lb.value - result.c_lb.value);
  return result;
}

absl::StatusOr<std::vector<CurvePoint>> BoundCurve(
    std::span<const ScoreRecord> records, const AuditConfig& config,
    TestMode mode) {
  ASSIGN_OR_RETURN(TestPlan plan, PlanTests(records, config, mode));
  std::vector<CurvePoint> curve;
  curve.reserve(plan.stats.size());
  for (const ThresholdStat& s : plan.stats) {
    ASSIGN_OR_RETURN(SolvedParam solved,
                     SolveMaxRejectedParam(s.true_positives, s.guesses,
                                           plan.per_test_level, plan.budget,
                                           config.bound_kind, config.param_cap));
    curve.push_back({s, solved.value, solved.capped});
  }
  return curve;
}

}  // namespace leakaudit
