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

#include "leakaudit/sim/harness.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "absl/strings/str_cat.h"
#include "leakaudit/random.h"
#include "leakaudit/status_macros.h"

namespace leakaudit {

uint64_t TrialSeed(uint64_t seed, uint64_t trial) {
  std::mt19937_64 engine = SeededEngine(seed, trial + 1);
  return engine();
}

double Median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

absl::StatusOr<ValidityReport> ValidityTrials(const CategoricalWorld& world,
                                              int64_t trials,
                                              const AuditConfig& config,
                                              uint64_t seed) {
  if (trials < 100) {
    return absl::InvalidArgumentError(
        absl::StrCat("validity trials need at least 100 games, got ", trials));
  }
  ValidityReport report;
  report.trials = trials;
  ASSIGN_OR_RETURN(report.true_c, TrueCloseness(world));
  for (int64_t t = 0; t < trials; ++t) {
    ASSIGN_OR_RETURN(WorldSample sample,
                     MakeWorldSample(world, TrialSeed(seed, t)));
    ASSIGN_OR_RETURN(BoundEstimate c_lb,
                     EstimateBound(sample.baseline_records, config,
                                   TestMode::kBaseline));
    if (c_lb.value > report.true_c + 1e-9) ++report.false_rejections;
  }
  report.rate = static_cast<double>(report.false_rejections) /
                static_cast<double>(trials);
  return report;
}

absl::StatusOr<std::vector<SweepLevel>> LeakageSweep(
    const CategoricalWorld& world_template, std::span<const double> separations,
    int64_t trials_per_level, const AuditConfig& config, uint64_t seed) {
  if (trials_per_level < 10) {
    return absl::InvalidArgumentError(absl::StrCat(
        "leakage sweep needs at least 10 trials per level, got ",
        trials_per_level));
  }
  if (!std::is_sorted(separations.begin(), separations.end())) {
    return absl::InvalidArgumentError("separations must be sorted ascending");
  }
  std::vector<SweepLevel> levels;
  for (double separation : separations) {
    CategoricalWorld world = world_template;
    world.loss_separation = separation;
    std::vector<double> eps(static_cast<size_t>(trials_per_level));
    for (int64_t t = 0; t < trials_per_level; ++t) {
      ASSIGN_OR_RETURN(WorldSample sample,
                       MakeWorldSample(world, TrialSeed(seed, t)));
      ASSIGN_OR_RETURN(AuditResult result,
                       Measure(sample.baseline_records, sample.mia_records,
                               config));
      eps[static_cast<size_t>(t)] = result.eps_tilde;
    }
    levels.push_back({separation, Median(std::move(eps))});
  }
  return levels;
}

absl::StatusOr<std::vector<int64_t>> FixedGuessTruePositives(
    const CategoricalWorld& world, int64_t guesses, int64_t games,
    uint64_t seed) {
  RETURN_IF_ERROR(world.Validate());
  if (guesses < 1 || games < 1) {
    return absl::InvalidArgumentError("guesses and games must be positive");
  }
  ASSIGN_OR_RETURN(double c_star, TrueCloseness(world));
  std::vector<bool> top(world.p_data.size());
  double top_mass = 0.0;
  for (size_t k = 0; k < top.size(); ++k) {
    top[k] = world.p_data[k] > 0.0 &&
             std::abs(std::log(world.p_data[k] / world.p_gen[k]) - c_star) < 1e-12;
    if (top[k]) top_mass += world.p_data[k] + world.p_gen[k];
  }
  if (!(top_mass > 0.0)) {
    return absl::FailedPreconditionError("no symbol attains the closeness");
  }

  std::discrete_distribution<size_t> from_data(world.p_data.begin(),
                                               world.p_data.end());
  std::discrete_distribution<size_t> from_gen(world.p_gen.begin(),
                                              world.p_gen.end());
  // Expected draws per guess is 2 / top_mass; allow a wide margin.
  const double draw_limit = 100.0 * static_cast<double>(guesses) / top_mass + 1e4;
  std::vector<int64_t> tp(static_cast<size_t>(games));
  for (int64_t g = 0; g < games; ++g) {
    std::mt19937_64 engine = SeededEngine(TrialSeed(seed, g));
    int64_t made = 0;
    int64_t correct = 0;
    for (double draws = 0; made < guesses; ++draws) {
      if (draws > draw_limit) {
        return absl::InternalError("guess budget not reached within draw limit");
      }
      const bool member = FlipFairCoin(engine);
      const size_t symbol = member ? from_data(engine) : from_gen(engine);
      if (!top[symbol]) continue;
      ++made;
      correct += member ? 1 : 0;
    }
    tp[static_cast<size_t>(g)] = correct;
  }
  return tp;
}

}  // namespace leakaudit
