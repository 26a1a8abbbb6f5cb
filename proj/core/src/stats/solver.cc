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

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "leakaudit/status_macros.h"
#include "leakaudit/stats/tail.h"

namespace leakaudit {

absl::StatusOr<SolvedParam> SolveMaxRejectedParam(
    int64_t true_positives, int64_t guesses, double per_test_level,
    const FailureBudget& budget, BoundKind kind, double param_cap) {
  if (true_positives > guesses) {
    return absl::InvalidArgumentError(
        absl::StrCat("true positives (", true_positives,
                     ") exceed guesses (", guesses, ")"));
  }
  if (!(per_test_level > 0.0 && per_test_level < 1.0)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "per-test level must lie in (0, 1), got ", per_test_level));
  }
  if (!(param_cap > 0.0) || !std::isfinite(param_cap)) {
    return absl::InvalidArgumentError(
        absl::StrCat("parameter cap must be positive, got ", param_cap));
  }
  auto rejected = [&](double x) {
    return IsRejected(true_positives, guesses, x, per_test_level, budget, kind);
  };

  ASSIGN_OR_RETURN(bool at_zero, rejected(0.0));
  if (!at_zero) return SolvedParam{0.0, false};
  ASSIGN_OR_RETURN(bool at_cap, rejected(param_cap));
  if (at_cap) return SolvedParam{param_cap, true};

  double lo = 0.0;
  double hi = param_cap;
  while (hi - lo > kBisectionTolerance) {
    const double mid = 0.5 * (lo + hi);
    ASSIGN_OR_RETURN(bool rej, rejected(mid));
    (rej ? lo : hi) = mid;
  }
  return SolvedParam{lo, false};
}

}  // namespace leakaudit
