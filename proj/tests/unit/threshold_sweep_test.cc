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
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "leakaudit/audit/records.h"

namespace leakaudit {
namespace {

TEST(SweepThresholdsTest, TwoRecords) {
  const std::vector<ScoreRecord> records = {{"a", 2.0, true}, {"b", 1.0, false}};
  const auto stats = SweepThresholds(records).value();
  ASSERT_EQ(stats.size(), 2u);
  EXPECT_EQ(stats[0], (ThresholdStat{2.0, 1, 1, 1.0, 1.0}));
  EXPECT_EQ(stats[1], (ThresholdStat{1.0, 2, 1, 0.5, 1.0}));
}

TEST(SweepThresholdsTest, AllEqualScoresGiveOneStat) {
  std::vector<ScoreRecord> records;
  for (int i = 0; i < 9; ++i) records.push_back({std::to_string(i), 0.5, i % 3 == 0});
  const auto stats = SweepThresholds(records).value();
  ASSERT_EQ(stats.size(), 1u);
  EXPECT_EQ(stats[0].guesses, 9);
  EXPECT_EQ(stats[0].true_positives, 3);
}

TEST(SweepThresholdsTest, TiesGuessMember) {
  const std::vector<ScoreRecord> records = {
      {"a", 1.0, false}, {"b", 3.0, true}, {"c", 1.0, true}, {"d", 0.0, false}};
  const auto stats = SweepThresholds(records).value();
  ASSERT_EQ(stats.size(), 3u);
  EXPECT_EQ(stats[1].tau, 1.0);
  EXPECT_EQ(stats[1].guesses, 3);
  EXPECT_EQ(stats[1].true_positives, 2);
}

TEST(SweepThresholdsTest, CountsAreMonotone) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> noise;
  std::vector<ScoreRecord> records;
  for (int i = 0; i < 400; ++i) {
    const bool member = rng() & 1;
    records.push_back({std::to_string(i), std::round(noise(rng) * 8) + member, member});
  }
  const auto stats = SweepThresholds(records).value();
  for (size_t i = 1; i < stats.size(); ++i) {
    EXPECT_GT(stats[i - 1].tau, stats[i].tau);
    EXPECT_LE(stats[i - 1].guesses, stats[i].guesses);
    EXPECT_LE(stats[i - 1].true_positives, stats[i].true_positives);
  }
  EXPECT_EQ(stats.back().guesses, 400);
  EXPECT_EQ(stats.back().recall, 1.0);
}

TEST(SweepThresholdsTest, Errors) {
  EXPECT_EQ(SweepThresholds({}).status().code(), absl::StatusCode::kInvalidArgument);
  const std::vector<ScoreRecord> no_members = {{"a", 1.0, false}};
  EXPECT_EQ(SweepThresholds(no_members).status().code(),
            absl::StatusCode::kInvalidArgument);
  const std::vector<ScoreRecord> nan = {{"a", std::nan(""), true}};
  EXPECT_EQ(SweepThresholds(nan).status().code(), absl::StatusCode::kInvalidArgument);
}

}  // namespace
}  // namespace leakaudit
