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

#include "binomial_pmf.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace leakaudit {
namespace internal {
namespace {

// stirlerr(n) = log(n!) - log(sqrt(2 pi n) (n/e)^n) for n = 0..15.
constexpr std::array<double, 16> kStirlingErrorTable = {
    0.0,
    0.08106146679532725822,
    0.041340695955409294094,
    0.027677925684998339149,
    0.020790672103765093112,
    0.016644691189821192163,
    0.013876128823070747999,
    0.011896709945891770095,
    0.010411265261972096497,
    0.0092554621827127329177,
    0.0083305634333628712565,
    0.007573675487951840795,
    0.0069428401072095298657,
    0.0064089941880042070684,
    0.0059513701127588477356,
    0.005554733551962801371,
};

double StirlingError(int64_t n) {
  constexpr double kS0 = 1.0 / 12.0;
  constexpr double kS1 = 1.0 / 360.0;
  constexpr double kS2 = 1.0 / 1260.0;
  constexpr double kS3 = 1.0 / 1680.0;
  constexpr double kS4 = 1.0 / 1188.0;
  if (n < static_cast<int64_t>(kStirlingErrorTable.size())) {
    return kStirlingErrorTable[static_cast<size_t>(n)];
  }
  const double x = static_cast<double>(n);
  const double nn = x * x;
  if (n > 500) return (kS0 - kS1 / nn) / x;
  if (n > 80) return (kS0 - (kS1 - kS2 / nn) / nn) / x;
  if (n > 35) return (kS0 - (kS1 - (kS2 - kS3 / nn) / nn) / nn) / x;
  return (kS0 - (kS1 - (kS2 - (kS3 - kS4 / nn) / nn) / nn) / nn) / x;
}

// Deviance term x log(x / np) + np - x, evaluated by series near x = np.
double Deviance(double x, double np) {
  if (std::abs(x - np) < 0.1 * (x + np)) {
    double v = (x - np) / (x + np);
    double s = (x - np) * v;
    double ej = 2.0 * x * v;
    v *= v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      const double s1 = s + ej / (2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
    }
    return s;
  }
  return x * std::log(x / np) + np - x;
}

}  // namespace

double BinomialPmf(int64_t x, int64_t n, double p, double q) {
  if (x < 0 || x > n) return 0.0;
  if (p == 0.0) return x == 0 ? 1.0 : 0.0;
  if (q == 0.0) return x == n ? 1.0 : 0.0;
  const double nd = static_cast<double>(n);
  if (x == 0) {
    if (n == 0) return 1.0;
    const double lc = p < 0.1 ? -Deviance(nd, nd * q) - nd * p : nd * std::log(q);
    return std::exp(lc);
  }
  if (x == n) {
    const double lc = q < 0.1 ? -Deviance(nd, nd * p) - nd * q : nd * std::log(p);
    return std::exp(lc);
  }
  const double xd = static_cast<double>(x);
  const double lc = StirlingError(n) - StirlingError(x) - StirlingError(n - x) -
                    Deviance(xd, nd * p) - Deviance(nd - xd, nd * q);
  const double lf = std::log(2.0 * std::numbers::pi) + std::log(xd) +
                    std::log1p(-xd / nd);
  return std::exp(lc - 0.5 * lf);
}

double UpperTail(int64_t n, int64_t v, double p, double q) {
  if (v <= 0) return 1.0;
  if (v > n) return 0.0;
  if (p == 0.0) return 0.0;
  if (q == 0.0) return 1.0;

  // Sum away from the mode so terms shrink monotonically and the loop can
  // stop once they no longer move the sum. When v is at or below the mode the
  // upper tail holds at least P[X = mode] of mass (bounded away from zero),
  // so the complement of the lower sum keeps full relative precision.
  const int64_t mode =
      std::min<int64_t>(n, static_cast<int64_t>(std::floor((n + 1) * p)));
  const double odds = p / q;
  if (v > mode) {
    double term = BinomialPmf(v, n, p, q);
    double sum = 0.0;
    for (int64_t k = v; k <= n && term > 0.0; ++k) {
      sum += term;
      if (term <= sum * 1e-17) break;
      term *= static_cast<double>(n - k) / static_cast<double>(k + 1) * odds;
    }
    return std::min(sum, 1.0);
  }
  double term = BinomialPmf(v - 1, n, p, q);
  double lower = 0.0;
  for (int64_t k = v - 1; k >= 0 && term > 0.0; --k) {
    lower += term;
    if (term <= lower * 1e-17) break;
    term *= static_cast<double>(k) / static_cast<double>(n - k + 1) / odds;
  }
  return std::clamp(1.0 - lower, 0.0, 1.0);
}

}  // namespace internal
}  // namespace leakaudit
