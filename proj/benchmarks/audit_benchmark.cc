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

#include "benchmark/benchmark.h"
#include "leakaudit/audit/audit_engine.h"
#include "leakaudit/o1/o1_auditor.h"
#include "leakaudit/sim/world.h"

namespace leakaudit {
namespace {

WorldSample Sample(int64_t m) {
  CategoricalWorld world = DefaultWorld();
  world.loss_separation = 1.0;
  world.audit_size = m;
  return MakeWorldSample(world, 1).value();
}

void BM_Measure(benchmark::State& state) {
  const WorldSample s = Sample(state.range(0));
  AuditConfig config;
  config.gamma = state.range(1) == 0 ? 0.0 : 1e-4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Measure(s.baseline_records, s.mia_records, config).value());
  }
}
BENCHMARK(BM_Measure)
    ->ArgsProduct({{1000, 10000, 100000}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

// Recall window [0, 0.5] without a union bound, gamma = 1e-3.
void BM_MeasureLowRecallNoUnion(benchmark::State& state) {
  const WorldSample s = Sample(state.range(0));
  AuditConfig config;
  config.gamma = 1e-3;
  config.union_bound = false;
  config.recall_window = {0.0, 0.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(Measure(s.baseline_records, s.mia_records, config).value());
  }
}
BENCHMARK(BM_MeasureLowRecallNoUnion)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_O1Measure(benchmark::State& state) {
  const WorldSample s = Sample(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(O1Measure(s.loss_records).value());
  }
}
BENCHMARK(BM_O1Measure)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_MakeWorldSample(benchmark::State& state) {
  CategoricalWorld world = DefaultWorld();
  world.audit_size = state.range(0);
  uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(MakeWorldSample(world, ++seed).value());
  }
}
BENCHMARK(BM_MakeWorldSample)->Arg(2000)->Arg(20000)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace leakaudit
