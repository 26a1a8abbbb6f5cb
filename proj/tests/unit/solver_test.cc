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

#include <random>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "leakaudit/oracles/oracles.h"
#include "leakaudit/stats/tail.h"

namespace leakaudit {
namespace {

using ::testing::DoubleNear;

double Solve(int64_t tp, int64_t r, double level, FailureBudget budget = {},
             BoundKind kind = BoundKind::kExact) {
  return SolveMaxRejectedParam(tp, r, level, budget, kind).value().value;
}

TEST(SolverTest, NoTruePositivesRejectNothing) {
  EXPECT_EQ(Solve(0, 50, 0.025), 0.0);
}

TEST(SolverTest, AllCorrectMatchesClosedForm) {
  // p* = 0.025^(1/100) = 0.963785...; logit(p*) = 3.2813...
  const double expected = oracles::AllCorrectClosedForm(100, 0.025);
  EXPECT_THAT(expected, DoubleNear(3.281346, 1e-6));
  EXPECT_THAT(Solve(100, 100, 0.025), DoubleNear(expected, 1e-6));
  for (int64_t r : {10, 1000, 100000}) {
    EXPECT_THAT(Solve(r, r, 0.01), DoubleNear(oracles::AllCorrectClosedForm(r, 0.01), 1e-6))
        << r;
  }
}

TEST(SolverTest, NegativeClosedFormClipsToZero) {
  // 0.01^(1/2) = 0.1 < 1/2, so nothing in [0, cap] is rejected.
  EXPECT_LT(oracles::AllCorrectClosedForm(2, 0.01), 0.0);
  EXPECT_EQ(Solve(2, 2, 0.01), 0.0);
}

TEST(SolverTest, CoinFlipPrecisionIsNotRejected) {
  // P[Bin(100, 1/2) >= 50] = 0.5398 > 0.025 already at x = 0.
  EXPECT_THAT(BinomialTail({100, 0.5, 50}).value(),
              DoubleNear(0.5397946186935894, 1e-12));
  EXPECT_EQ(Solve(50, 100, 0.025), 0.0);
}

TEST(SolverTest, ReturnedValueIsRejectedAndBracketIsTight) {
  const FailureBudget none;
  for (auto [tp, r] : {std::pair<int64_t, int64_t>{70, 100}, {450, 600}, {19, 20}}) {
    const SolvedParam s =
        SolveMaxRejectedParam(tp, r, 0.01, none, BoundKind::kExact).value();
    ASSERT_FALSE(s.capped);
    EXPECT_LE(RejectionTail(tp, r, s.value, none, BoundKind::kExact).value(), 0.01);
    EXPECT_GT(RejectionTail(tp, r, s.value + kBisectionTolerance, none,
                            BoundKind::kExact)
                  .value(),
              0.01);
  }
}

TEST(SolverTest, CapIsFlagged) {
  const SolvedParam s =
      SolveMaxRejectedParam(1000, 1000, 0.4, {}, BoundKind::kExact, 1.0).value();
  EXPECT_TRUE(s.capped);
  EXPECT_EQ(s.value, 1.0);
}

TEST(SolverTest, RejectsBadArguments) {
  EXPECT_EQ(SolveMaxRejectedParam(5, 4, 0.05, {}, BoundKind::kExact).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_FALSE(SolveMaxRejectedParam(1, 4, 0.0, {}, BoundKind::kExact).ok());
  EXPECT_FALSE(SolveMaxRejectedParam(1, 4, 1.0, {}, BoundKind::kExact).ok());
  EXPECT_FALSE(SolveMaxRejectedParam(1, 4, 0.5, {}, BoundKind::kExact, 0.0).ok());
}

TEST(SolverTest, MonotoneInEvidenceLevelAndBudget) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const int64_t r = 5 + static_cast<int64_t>(rng() % 400);
    const int64_t tp = static_cast<int64_t>(rng() % r);
    const double base = Solve(tp, r, 0.01);
    EXPECT_GE(Solve(tp + 1, r, 0.01) + 1e-6, base);
    EXPECT_GE(Solve(tp, r, 0.05) + 1e-6, base);
    const double relaxed = Solve(tp, r, 0.01, {1.5, r});
    EXPECT_LE(relaxed, base + 1e-6);
    EXPECT_LE(Solve(tp, r, 0.01, {4.0, r}), relaxed + 1e-6);
  }
}

TEST(SolverTest, ExactRejectsAtLeastAsMuchAsHoeffding) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> level(1e-4, 0.2);
  for (int trial = 0; trial < 1000; ++trial) {
    const int64_t r = 1 + static_cast<int64_t>(rng() % 500);
    const int64_t tp = static_cast<int64_t>(rng() % (r + 1));
    const double a = level(rng);
    EXPECT_GE(Solve(tp, r, a) + 1e-6, Solve(tp, r, a, {}, BoundKind::kHoeffding))
        << tp << "/" << r << " at " << a;
  }
}

}  // namespace
}  // namespace leakaudit
