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
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "leakaudit/oracles/oracles.h"

namespace leakaudit::oracles {

absl::StatusOr<Rational> EnumerateTail(int trials, const Rational& p,
                                       int threshold) {
  if (trials < 0 || trials > kMaxEnumerationTrials) {
    return absl::OutOfRangeError(absl::StrCat(
        "exact enumeration supports 0..", kMaxEnumerationTrials,
        " trials, got ", trials));
  }
  if (p < 0 || p > 1) {
    return absl::InvalidArgumentError("p must lie in [0, 1]");
  }
  // Pascal's triangle row for C(trials, k).
  std::vector<boost::multiprecision::cpp_int> row{1};
  for (int n = 1; n <= trials; ++n) {
    std::vector<boost::multiprecision::cpp_int> next(n + 1);
    next[0] = next[n] = 1;
    for (int k = 1; k < n; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  const Rational q = Rational(1) - p;
  Rational total = 0;
  for (int k = std::max(threshold, 0); k <= trials; ++k) {
    Rational term = Rational(row[k]);
    for (int i = 0; i < k; ++i) term *= p;
    for (int i = 0; i < trials - k; ++i) term *= q;
    total += term;
  }
  return total;
}

absl::StatusOr<double> LpWorstFailure(int trials, const Rational& p,
                                      int threshold, double mean_cap,
                                      int support_cap) {
  if (trials > kMaxLpSize || support_cap > kMaxLpSize || support_cap < 0) {
    return absl::OutOfRangeError(
        absl::StrCat("LP oracle supports sizes up to ", kMaxLpSize));
  }
  std::vector<double> g(support_cap + 1);
  for (int k = 0; k <= support_cap; ++k) {
    auto tail = EnumerateTail(trials, p, threshold - k);
    if (!tail.ok()) return tail.status();
    g[k] = ToDouble(*tail);
  }
  double best = 0.0;
  // Single-point supports: F = k with probability 1.
  for (int k = 0; k <= support_cap; ++k) {
    if (k <= mean_cap) best = std::max(best, g[k]);
  }
  // Two-point supports {j, k} with the mean constraint tight.
  for (int j = 0; j <= support_cap; ++j) {
    for (int k = j + 1; k <= support_cap; ++k) {
      if (j <= mean_cap && mean_cap <= k) {
        const double wk = (mean_cap - j) / (k - j);
        best = std::max(best, (1.0 - wk) * g[j] + wk * g[k]);
      }
    }
  }
  return best;
}

double AllCorrectClosedForm(int64_t guesses, double level) {
  // p* = level^(1/r); logit(p*) = log(p*) - log(1 - p*).
  const double log_p = std::log(level) / static_cast<double>(guesses);
  return log_p - std::log(-std::expm1(log_p));
}

double ToDouble(const Rational& r) {
  using boost::multiprecision::cpp_bin_float_100;
  const cpp_bin_float_100 num(boost::multiprecision::numerator(r));
  const cpp_bin_float_100 den(boost::multiprecision::denominator(r));
  return static_cast<double>(num / den);
}

}  // namespace leakaudit::oracles
