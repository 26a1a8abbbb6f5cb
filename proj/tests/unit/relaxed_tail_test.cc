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
#include <random>
#include <utility>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "leakaudit/oracles/oracles.h"
#include "leakaudit/stats/tail.h"

namespace leakaudit {
namespace {

using ::testing::DoubleNear;

double Relaxed(int64_t r, double p, int64_t v, double mu, int64_t m,
               BoundKind kind = BoundKind::kExact) {
  return RelaxedTail({r, p, v}, {mu, m}, kind).value();
}

TEST(RelaxedTailTest, NoFailureMassIsBinomial) {
  EXPECT_DOUBLE_EQ(Relaxed(2, 0.5, 2, 0.0, 2), 0.25);
}

TEST(RelaxedTailTest, FullFailureMassIsCertain) {
  EXPECT_DOUBLE_EQ(Relaxed(2, 0.5, 2, 2.0, 2), 1.0);
}

TEST(RelaxedTailTest, HalfUnitOfFailureMass) {
  // Optimum puts half the mass on F = 1: 0.5 * 0.25 + 0.5 * 0.75.
  EXPECT_THAT(Relaxed(2, 0.5, 2, 0.5, 2), DoubleNear(0.5, 1e-15));
}

TEST(RelaxedTailTest, OptimalSupportNeedNotContainZero) {
  // g = (P[X>=4], P[X>=3], P[X>=2]) = (0, 0.729, 0.972) for X ~ Bin(3, 0.9).
  // With mu = 1.5 the best distribution mixes F = 1 and F = 2.
  EXPECT_THAT(Relaxed(3, 0.9, 4, 1.5, 2), DoubleNear(0.8505, 1e-12));
  const double lp =
      oracles::LpWorstFailure(3, oracles::Rational(9, 10), 4, 1.5, 2).value();
  EXPECT_THAT(Relaxed(3, 0.9, 4, 1.5, 2), DoubleNear(lp, 1e-12));
}

TEST(RelaxedTailTest, RejectsMeanAboveSupport) {
  EXPECT_EQ(RelaxedTail({4, 0.5, 2}, {3.0, 2}).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(RelaxedTail({4, 0.5, 2}, {-1.0, 2}).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(RelaxedTailTest, MatchesLpOracleOnFullGrid) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int r = 0; r <= oracles::kMaxLpSize; ++r) {
    for (int m = 0; m <= oracles::kMaxLpSize; ++m) {
      for (int tenth = 1; tenth <= 9; ++tenth) {
        const double p = tenth / 10.0;
        for (int v = 0; v <= r + m + 1; ++v) {
          for (int rep = 0; rep < 4; ++rep) {
            const double mu = rep == 0 ? 0.0 : unit(rng) * m;
            const double lp = oracles::LpWorstFailure(
                                  r, oracles::Rational(tenth, 10), v, mu, m)
                                  .value();
            EXPECT_THAT(Relaxed(r, p, v, mu, m), DoubleNear(lp, 1e-9))
                << "r=" << r << " m=" << m << " p=" << p << " v=" << v
                << " mu=" << mu;
          }
        }
      }
    }
  }
}

TEST(RelaxedTailTest, NondecreasingInMeanCap) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int64_t r = 1 + static_cast<int64_t>(rng() % 300);
    const int64_t m = 1 + static_cast<int64_t>(rng() % 50);
    const int64_t v = static_cast<int64_t>(rng() % (r + 2));
    const double p = (rng() % 999 + 1) / 1000.0;
    double prev = Relaxed(r, p, v, 0.0, m);
    EXPECT_THAT(prev, DoubleNear(BinomialTail({r, p, v}).value(), 1e-12));
    for (double frac : {0.01, 0.1, 0.3, 0.7, 1.0}) {
      const double cur = Relaxed(r, p, v, frac * m, m);
      EXPECT_GE(cur, prev - 1e-15);
      prev = cur;
    }
  }
}

// Full upper concave envelope of g(k) = P[X >= v - k], k = 0..min(v, m),
// evaluated at mu, with every point computed independently.
double NaiveRelaxed(int64_t r, double p, int64_t v, double mu, int64_t m,
                    BoundKind kind) {
  std::vector<std::pair<double, double>> hull;
  for (int64_t k = 0; k <= std::min(v, m); ++k) {
    const TailQuery q{r, p, v - k};
    const double g = kind == BoundKind::kExact ? BinomialTail(q).value()
                                               : HoeffdingTail(q).value();
    const std::pair<double, double> b{static_cast<double>(k), g};
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull.back();
      if ((a.first - o.first) * (b.second - o.second) -
              (a.second - o.second) * (b.first - o.first) < 0.0) {
        break;
      }
      hull.pop_back();
    }
    hull.push_back(b);
  }
  for (size_t i = 0; i + 1 < hull.size(); ++i) {
    if (mu <= hull[i + 1].first) {
      return hull[i].second + (mu - hull[i].first) /
                                  (hull[i + 1].first - hull[i].first) *
                                  (hull[i + 1].second - hull[i].second);
    }
  }
  return hull.back().second;
}

TEST(RelaxedTailTest, MatchesNaiveEnvelopeForLargeTrials) {
  std::mt19937_64 rng(97);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const int64_t r = 50 + static_cast<int64_t>(rng() % 3000);
    const double p = 0.05 + 0.9 * unit(rng);
    // Thresholds around and above the mean, where the envelope is nontrivial.
    const int64_t v = std::min<int64_t>(
        r, static_cast<int64_t>(r * p + (unit(rng) * 8.0 - 2.0) * std::sqrt(r)));
    const int64_t m = 1 + static_cast<int64_t>(rng() % (2 * r));
    const double mu = std::pow(unit(rng), 3) * std::min<double>(m, 60.0);
    for (BoundKind kind : {BoundKind::kExact, BoundKind::kHoeffding}) {
      EXPECT_THAT(Relaxed(r, p, v, mu, m, kind),
                  DoubleNear(NaiveRelaxed(r, p, v, mu, m, kind), 1e-12))
          << "r=" << r << " p=" << p << " v=" << v << " m=" << m << " mu=" << mu;
    }
  }
}

TEST(RelaxedTailTest, IsRejectedAgreesWithTail) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const int64_t r = 1 + static_cast<int64_t>(rng() % 2000);
    const int64_t tp = static_cast<int64_t>(rng() % (r + 1));
    const double x = 3.0 * unit(rng);
    const FailureBudget budget{std::min<double>(r, 20.0 * unit(rng)), r};
    const double level = std::pow(10.0, -6.0 * unit(rng));
    for (BoundKind kind : {BoundKind::kExact, BoundKind::kHoeffding}) {
      const double tail = RejectionTail(tp, r, x, budget, kind).value();
      EXPECT_EQ(IsRejected(tp, r, x, level, budget, kind).value(), tail <= level)
          << tp << "/" << r << " x=" << x << " level=" << level;
    }
  }
}

TEST(RelaxedTailTest, HoeffdingVariantDominatesExact) {
  for (int64_t r : {5, 40, 200}) {
    for (int64_t v = 0; v <= r; v += 1 + r / 10) {
      for (double mu : {0.0, 0.5, 2.5}) {
        EXPECT_GE(Relaxed(r, 0.6, v, mu, 5, BoundKind::kHoeffding) + 1e-15,
                  Relaxed(r, 0.6, v, mu, 5));
      }
    }
  }
}

}  // namespace
}  // namespace leakaudit
