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

// Measurement phase of the audit. Scores from a baseline classifier (sees
// only the data point) and from a membership-inference attack (also sees the
// target model) are swept into guess vectors; each guess vector is inverted
// into the largest rejected parameter, and the maxima over thresholds give
//
//   c_lb        from the baseline records   (closeness of the generator),
//   {c+eps}_lb  from the attack records,
//   eps_tilde = max(0, {c+eps}_lb - c_lb).
//
// The total confidence budget beta is split evenly between the two tests and
// then, within each test, across the thresholds examined.

#ifndef LEAKAUDIT_AUDIT_AUDIT_ENGINE_H_
#define LEAKAUDIT_AUDIT_AUDIT_ENGINE_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "leakaudit/audit/records.h"
#include "leakaudit/stats/tail.h"

namespace leakaudit {

enum class TestMode { kBaseline, kMia };

// Denominator of the per-threshold union bound.
enum class UnionDenominator {
  kTestsPerformed,  // thresholds inside the recall window (K <= m)
  kAuditSize,       // the number of audit records m
};

struct RecallWindow {
  double min = 0.0;
  double max = 1.0;

  friend bool operator==(const RecallWindow&, const RecallWindow&) = default;
};

struct AuditConfig {
  double beta = 0.05;
  // Generator relaxation: (c, gamma)-closeness.
  double gamma = 0.0;
  // Target relaxation: (eps, delta)-DP.
  double delta = 0.0;
  BoundKind bound_kind = BoundKind::kExact;
  bool union_bound = true;
  UnionDenominator union_denominator = UnionDenominator::kTestsPerformed;
  RecallWindow recall_window;
  double param_cap = kDefaultParamCap;
  // Use 2*m*delta instead of 2*m*gamma as the baseline failure mean when
  // delta > 0. Off by default.
  bool baseline_budget_from_delta = false;

  absl::Status Validate() const;

  friend bool operator==(const AuditConfig&, const AuditConfig&) = default;
};

struct BoundEstimate {
  double value = 0.0;
  bool capped = false;
  double witness_threshold = 0.0;
  double witness_recall = 0.0;
  int64_t witness_guesses = 0;
  int64_t witness_tp = 0;
  double per_test_level = 0.0;
  int64_t tests_performed = 0;

  friend bool operator==(const BoundEstimate&, const BoundEstimate&) = default;
};

struct AuditResult {
  BoundEstimate c_lb;
  BoundEstimate c_plus_eps_lb;
  double eps_tilde = 0.0;
  AuditConfig config;

  friend bool operator==(const AuditResult&, const AuditResult&) = default;
};

std::string_view TestModeName(TestMode mode);

// Failure-count constraints for `audit_size` records: E[F] <= 2m*gamma for the
// baseline, and 2m*gamma (delta = 0) or 2m(gamma + delta - gamma*delta)
// (delta > 0) for the attack. The mean is clipped to the support size m.
FailureBudget FailureBudgetFor(const AuditConfig& config, TestMode mode,
                               int64_t audit_size);

absl::StatusOr<BoundEstimate> EstimateBound(std::span<const ScoreRecord> records,
                                            const AuditConfig& config,
                                            TestMode mode);

// Both record lists must come from the same game: identical id sets with
// identical membership bits. Order may differ.
absl::StatusOr<AuditResult> Measure(std::span<const ScoreRecord> baseline,
                                    std::span<const ScoreRecord> mia,
                                    const AuditConfig& config);

// Per-threshold solved bound for every in-window threshold; used for plots.
struct CurvePoint {
  ThresholdStat stat;
  double bound = 0.0;
  bool capped = false;
};
absl::StatusOr<std::vector<CurvePoint>> BoundCurve(
    std::span<const ScoreRecord> records, const AuditConfig& config,
    TestMode mode);

}  // namespace leakaudit

#endif  // LEAKAUDIT_AUDIT_AUDIT_ENGINE_H_
