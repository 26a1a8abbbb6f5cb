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

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "leakaudit/oracles/oracles.h"

namespace leakaudit::oracles {
namespace {

TEST(EnumerateTailTest, ExactValues) {
  EXPECT_EQ(EnumerateTail(3, Rational(1, 2), 2).value(), Rational(1, 2));
  EXPECT_EQ(EnumerateTail(4, Rational(1, 3), 4).value(), Rational(1, 81));
  EXPECT_EQ(EnumerateTail(2, Rational(2, 3), 1).value(), Rational(8, 9));
  EXPECT_EQ(EnumerateTail(6, Rational(1, 7), 0).value(), Rational(1));
  EXPECT_EQ(EnumerateTail(6, Rational(1, 7), 7).value(), Rational(0));
}

TEST(EnumerateTailTest, SizeLimit) {
  EXPECT_EQ(EnumerateTail(21, Rational(1, 2), 3).status().code(),
            absl::StatusCode::kOutOfRange);
}

TEST(LpWorstFailureTest, ZeroMeanIsPlainTail) {
  EXPECT_DOUBLE_EQ(LpWorstFailure(4, Rational(1, 3), 3, 0.0, 4).value(),
                   ToDouble(EnumerateTail(4, Rational(1, 3), 3).value()));
}

TEST(LpWorstFailureTest, HalfUnitInstance) {
  EXPECT_DOUBLE_EQ(LpWorstFailure(2, Rational(1, 2), 2, 0.5, 2).value(), 0.5);
}

TEST(LpWorstFailureTest, DeterministicFullFailure) {
  EXPECT_DOUBLE_EQ(LpWorstFailure(3, Rational(1, 5), 3, 3.0, 3).value(), 1.0);
}

TEST(AllCorrectClosedFormTest, SmallCase) {
  // level^(1/1) = p, logit(0.2) = log(0.25).
  EXPECT_DOUBLE_EQ(AllCorrectClosedForm(1, 0.2), std::log(0.25));
}

}  // namespace
}  // namespace leakaudit::oracles
