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

#ifndef LEAKAUDIT_SRC_STATS_BINOMIAL_PMF_H_
#define LEAKAUDIT_SRC_STATS_BINOMIAL_PMF_H_

#include <cstdint>

#include "leakaudit/stats/tail.h"

namespace leakaudit {
namespace internal {

// Binomial probability mass at x, with q = 1 - p supplied separately so that
// p close to 1 keeps full relative precision. Uses the saddle-point form
// (Stirling error + deviance) rather than lgamma differences, which lose
// about log10(n) digits for large n.
double BinomialPmf(int64_t x, int64_t n, double p, double q);

// P[Bin(n, p) >= v]. Arguments are assumed valid.
double UpperTail(int64_t n, int64_t v, double p, double q);

// exp(-2n(v/n - p)^2) for v > np, else 1. Requires n >= 1.
double HoeffdingUpperTail(int64_t n, int64_t v, double p);

// Worst-case tail over failure distributions. When `stop_above` is given, may
// return early with any lower bound on the tail that exceeds it.
double RelaxedUpperTail(int64_t n, int64_t v, double p, double q,
                        const FailureBudget& budget, BoundKind kind,
                        double stop_above = 2.0);

}  // namespace internal
}  // namespace leakaudit

#endif  // LEAKAUDIT_SRC_STATS_BINOMIAL_PMF_H_
