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

#include <cstdint>

#include "benchmark/benchmark.h"
#include "leakaudit/stats/tail.h"

namespace leakaudit {
namespace {

void BM_BinomialTail(benchmark::State& state) {
  const int64_t r = state.range(0);
  int64_t v = r / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(BinomialTail({r, 0.4, v}).value());
    v = v + 1 > r ? r / 2 : v + 1;
  }
}
BENCHMARK(BM_BinomialTail)->RangeMultiplier(10)->Range(10, 1000000);

void BM_RelaxedTail(benchmark::State& state) {
  const int64_t r = state.range(0);
  const FailureBudget budget{0.002 * r, r};
  for (auto _ : state) {
    benchmark::DoNotOptimize(RelaxedTail({r, 0.7, (r * 9) / 10}, budget).value());
  }
}
BENCHMARK(BM_RelaxedTail)->RangeMultiplier(10)->Range(100, 100000);

void BM_SolveMaxRejectedParam(benchmark::State& state) {
  const int64_t r = state.range(0);
  const int64_t tp = (r * 9) / 10;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        SolveMaxRejectedParam(tp, r, 1e-5, {}, BoundKind::kExact).value());
  }
}
BENCHMARK(BM_SolveMaxRejectedParam)->RangeMultiplier(10)->Range(100, 100000);

}  // namespace
}  // namespace leakaudit

BENCHMARK_MAIN();
