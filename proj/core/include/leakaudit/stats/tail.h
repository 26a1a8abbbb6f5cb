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

// Tail probabilities of Bernoulli guess counts and the solver that inverts a
// tail test into the largest rejected closeness / privacy parameter.
//
// A guess vector with `r` positive guesses, of which `tp` are correct, is
// compared against `r` independent Bernoulli(p) draws where
// p = e^x / (1 + e^x). For the baseline test x is the generator closeness c;
// for the membership-inference test it is c + epsilon. All functions here are
// pure and thread-safe.

#ifndef LEAKAUDIT_STATS_TAIL_H_
#define LEAKAUDIT_STATS_TAIL_H_

#include <cstdint>
#include <string_view>

#include "absl/status/statusor.h"

namespace leakaudit {

// Which tail is used for the hypothesis test.
//   kExact: the binomial survival function.
//   kHoeffding: exp(-2r(v/r - p)^2), a looser closed form.
enum class BoundKind { kExact, kHoeffding };

std::string_view BoundKindName(BoundKind kind);
absl::StatusOr<BoundKind> ParseBoundKind(std::string_view name);

// P[Bin(trials, success_prob) >= threshold].
struct TailQuery {
  int64_t trials = 0;
  double success_prob = 0.5;
  // Thresholds <= 0 give tail 1; thresholds > trials give tail 0.
  int64_t threshold = 0;
};

// Constraints on the failure-count distribution F added to the guess count
// under a relaxed closeness assumption: F is supported on
// {0, 1, ..., support_cap} and E[F] <= mean_cap.
struct FailureBudget {
  double mean_cap = 0.0;
  int64_t support_cap = 0;
};

inline constexpr double kDefaultParamCap = 20.0;
inline constexpr double kBisectionTolerance = 1e-6;

// Exact binomial upper tail. Stable for trials up to at least 1e6.
absl::StatusOr<double> BinomialTail(const TailQuery& q);

// Hoeffding upper bound on BinomialTail. Requires trials >= 1.
absl::StatusOr<double> HoeffdingTail(const TailQuery& q);

// max over F satisfying `budget` of P[F + Bin(trials, p) >= threshold].
//
// Writing g(k) for the tail at threshold - k, the maximum is the upper
// concave envelope of {(k, g(k)) : 0 <= k <= min(threshold, support_cap)}
// evaluated at mean_cap, so an optimal F has at most two support points.
absl::StatusOr<double> RelaxedTail(const TailQuery& q,
                                   const FailureBudget& budget,
                                   BoundKind kind = BoundKind::kExact);

// Numerically careful logistic map: returns {p, 1 - p} for p = e^x/(1+e^x).
struct SuccessProb {
  double p;
  double q;
};
SuccessProb LogisticProb(double x);

// Tail of the test statistic `true_positives` out of `guesses` under the
// hypothesis that the parameter equals `param`.
absl::StatusOr<double> RejectionTail(int64_t true_positives, int64_t guesses,
                                     double param, const FailureBudget& budget,
                                     BoundKind kind);

// RejectionTail(...) <= level, without finishing the tail computation once a
// lower bound already exceeds `level`.
absl::StatusOr<bool> IsRejected(int64_t true_positives, int64_t guesses,
                                double param, double level,
                                const FailureBudget& budget, BoundKind kind);

struct SolvedParam {
  double value = 0.0;
  // True when even `param_cap` is rejected; the supremum is at least
  // `value` but was not resolved further.
  bool capped = false;
};

// Largest x in [0, param_cap] whose hypothesis is rejected at
// `per_test_level`, i.e. RejectionTail(x) <= per_test_level. Returns 0 when
// x = 0 is not rejected. The tail is nondecreasing in x, so the boundary is
// found by bisection to kBisectionTolerance; the returned value is the
// rejected end of the final bracket.
absl::StatusOr<SolvedParam> SolveMaxRejectedParam(
    int64_t true_positives, int64_t guesses, double per_test_level,
    const FailureBudget& budget, BoundKind kind,
    double param_cap = kDefaultParamCap);

}  // namespace leakaudit

#endif  // LEAKAUDIT_STATS_TAIL_H_
