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

// Brute-force reference computations used to check the production tail and
// solver code. They are slow on purpose and share no code with leakaudit_core.

#ifndef LEAKAUDIT_ORACLES_ORACLES_H_
#define LEAKAUDIT_ORACLES_ORACLES_H_

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "absl/status/statusor.h"

namespace leakaudit::oracles {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kMaxEnumerationTrials = 20;
inline constexpr int kMaxLpSize = 6;

// sum_{k >= threshold} C(trials, k) p^k (1-p)^(trials-k), exactly.
absl::StatusOr<Rational> EnumerateTail(int trials, const Rational& p,
                                       int threshold);

// Worst-case P[F + Bin(trials, p) >= threshold] over all distributions of F
// on {0..support_cap} with E[F] <= mean_cap, by enumerating every basic
// feasible solution of the LP (supports of size one or two).
absl::StatusOr<double> LpWorstFailure(int trials, const Rational& p,
                                      int threshold, double mean_cap,
                                      int support_cap);

// logit(level^(1/r)): the largest rejected parameter when all r guesses are
// correct, under the exact binomial test without relaxation.
double AllCorrectClosedForm(int64_t guesses, double level);

double ToDouble(const Rational& r);

}  // namespace leakaudit::oracles

#endif  // LEAKAUDIT_ORACLES_ORACLES_H_
