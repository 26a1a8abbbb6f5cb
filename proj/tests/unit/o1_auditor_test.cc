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
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "leakaudit/o1/o1_auditor.h"
#include "leakaudit/oracles/oracles.h"

namespace leakaudit {
namespace {

using ::testing::DoubleNear;

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<ScoreRecord> Losses(int n, double gap, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise;
  std::vector<ScoreRecord> records;
  for (int i = 0; i < n; ++i) {
    const bool member = (rng() >> 63) != 0;
    records.push_back({"x" + std::to_string(i), noise(rng) - gap * member, member});
  }
  return records;
}

TEST(BuildGuessesTest, TotalAbstention) {
  const auto records = Losses(50, 1.0, 1);
  const GuessCounts c = BuildGuesses(records, {-kInf, kInf}).value();
  EXPECT_EQ(c.guesses, 0);
  EXPECT_EQ(c.correct, 0);
}

TEST(BuildGuessesTest, HandTrace) {
  const std::vector<ScoreRecord> records = {{"a", 0.1, true}, {"b", 0.9, false}};
  const GuessCounts c = BuildGuesses(records, {0.5, 0.5}).value();
  EXPECT_EQ(c.guesses, 2);
  EXPECT_EQ(c.correct, 2);
}

TEST(BuildGuessesTest, ThresholdTiesAbstain) {
  const std::vector<ScoreRecord> records = {{"a", 0.5, true}, {"b", 0.7, false}};
  const GuessCounts c = BuildGuesses(records, {0.5, 0.7}).value();
  EXPECT_EQ(c.guesses, 0);
}

TEST(BuildGuessesTest, FlippedBitsComplementCorrect) {
  auto records = Losses(300, 0.7, 2);
  const AbstentionThresholds t{-0.5, 0.4};
  const GuessCounts before = BuildGuesses(records, t).value();
  for (auto& r : records) r.member = !r.member;
  const GuessCounts after = BuildGuesses(records, t).value();
  EXPECT_EQ(after.guesses, before.guesses);
  EXPECT_EQ(after.correct, before.guesses - before.correct);
}

TEST(BuildGuessesTest, RejectsCrossedThresholds) {
  EXPECT_FALSE(BuildGuesses({}, {1.0, 0.0}).ok());
}

TEST(O1MeasureTest, PerfectSeparationUsesAllGuessCombo) {
  std::vector<ScoreRecord> records;
  for (int i = 0; i < 200; ++i) {
    const bool member = i % 2 == 0;
    records.push_back({std::to_string(i), member ? i : 1000.0 + i, member});
  }
  const O1Result res = O1Measure(records, 51).value();
  // 51 grid slots give 51*52/2 ordered pairs; only (-inf, +inf) makes no guess.
  EXPECT_EQ(res.combos_tested, 1325);
  EXPECT_EQ(res.guesses, 200);
  EXPECT_EQ(res.correct, 200);
  EXPECT_THAT(res.epsilon,
              DoubleNear(oracles::AllCorrectClosedForm(200, 0.05 / 1325), 1e-6));
  EXPECT_FALSE(res.capped);
}

TEST(O1MeasureTest, WitnessReproducesCountsAndSharedSolver) {
  const auto records = Losses(1000, 2.0, 8);
  const O1Result res = O1Measure(records).value();
  ASSERT_GT(res.epsilon, 0.0);
  const GuessCounts c = BuildGuesses(records, res.thresholds).value();
  EXPECT_EQ(c.guesses, res.guesses);
  EXPECT_EQ(c.correct, res.correct);
  const SolvedParam direct = SolveMaxRejectedParam(res.correct, res.guesses,
                                                   res.per_test_level, {},
                                                   BoundKind::kExact)
                                 .value();
  EXPECT_EQ(direct.value, res.epsilon);
}

TEST(O1MeasureTest, InvariantUnderIncreasingTransforms) {
  const auto records = Losses(600, 1.0, 3);
  auto transformed = records;
  for (auto& r : transformed) r.score = std::exp(r.score);
  EXPECT_EQ(O1Measure(records).value().epsilon,
            O1Measure(transformed).value().epsilon);
}

TEST(O1MeasureTest, NullScoresRarelyReject) {
  int positive = 0;
  constexpr int kTrials = 300;
  for (int t = 0; t < kTrials; ++t) {
    if (O1Measure(Losses(200, 0.0, 500 + t)).value().epsilon > 0.0) ++positive;
  }
  EXPECT_LE(positive, kTrials * 0.05 + 2 * std::sqrt(kTrials * 0.05 * 0.95));
}

TEST(O1MeasureTest, DegenerateScores) {
  std::vector<ScoreRecord> records;
  for (int i = 0; i < 10; ++i) records.push_back({std::to_string(i), 1.0, i < 5});
  const O1Result res = O1Measure(records).value();
  EXPECT_EQ(res.epsilon, 0.0);
  EXPECT_EQ(res.combos_tested, 1);
}

TEST(O1MeasureTest, Errors) {
  EXPECT_FALSE(O1Measure({}).ok());
  const auto records = Losses(10, 0.0, 1);
  EXPECT_FALSE(O1Measure(records, 1).ok());
  EXPECT_FALSE(O1Measure(records, 50, 0.0).ok());
}

}  // namespace
}  // namespace leakaudit
