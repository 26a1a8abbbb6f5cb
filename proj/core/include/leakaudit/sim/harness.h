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

// Monte Carlo harnesses over simulated worlds. Trial t of a run with seed s
// always uses the same derived seed, so results do not depend on execution
// order, and trials at different sweep levels share their random draws.

#ifndef LEAKAUDIT_SIM_HARNESS_H_
#define LEAKAUDIT_SIM_HARNESS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "leakaudit/audit/audit_engine.h"
#include "leakaudit/sim/world.h"

namespace leakaudit {

uint64_t TrialSeed(uint64_t seed, uint64_t trial);

struct ValidityReport {
  int64_t trials = 0;
  int64_t false_rejections = 0;
  double rate = 0.0;
  double true_c = 0.0;
};

// Counts games in which c_lb exceeds the true closeness (+1e-9).
absl::StatusOr<ValidityReport> ValidityTrials(const CategoricalWorld& world,
                                              int64_t trials,
                                              const AuditConfig& config,
                                              uint64_t seed);

struct SweepLevel {
  double separation = 0.0;
  double median_eps_tilde = 0.0;
};

absl::StatusOr<std::vector<SweepLevel>> LeakageSweep(
    const CategoricalWorld& world_template, std::span<const double> separations,
    int64_t trials_per_level, const AuditConfig& config, uint64_t seed);

// For each game, scans fresh game indices and guesses "member" on every point
// whose symbol attains the maximal likelihood ratio until `guesses` guesses
// have been made; returns the number of correct guesses per game.
absl::StatusOr<std::vector<int64_t>> FixedGuessTruePositives(
    const CategoricalWorld& world, int64_t guesses, int64_t games,
    uint64_t seed);

double Median(std::vector<double> values);

}  // namespace leakaudit

#endif  // LEAKAUDIT_SIM_HARNESS_H_
