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

// Synthetic audit worlds over a finite symbol alphabet, where the closeness of
// the generator to the data distribution is known exactly:
//
//   c* = max(0, max_k log(p_data(k) / p_gen(k))).
//
// A target-model loss channel stands in for a trained model: members have
// loss ~ N(-separation, noise^2), non-members ~ N(0, noise^2).

#ifndef LEAKAUDIT_SIM_WORLD_H_
#define LEAKAUDIT_SIM_WORLD_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "leakaudit/audit/records.h"

namespace leakaudit {

struct CategoricalWorld {
  std::vector<double> p_data;
  std::vector<double> p_gen;
  double loss_separation = 0.0;
  double loss_noise = 1.0;
  // Weight of the standardized loss channel in the attack score.
  double mia_weight = 1.0;
  int64_t audit_size = 2000;

  absl::Status Validate() const;
};

// Minimal c such that e^-c p_data <= p_gen everywhere. Symbols with
// p_gen = 0 and p_data > 0 make c infinite, which is an error.
absl::StatusOr<double> TrueCloseness(std::span<const double> p_data,
                                     std::span<const double> p_gen);
absl::StatusOr<double> TrueCloseness(const CategoricalWorld& world);

// Dirichlet(concentration * p_data) draw, redrawn until every entry is at
// least `min_entry`.
absl::StatusOr<std::vector<double>> PerturbedGenerator(
    std::span<const double> p_data, double concentration, double min_entry,
    uint64_t seed);

// 8 symbols, uniform data distribution, Dirichlet-perturbed generator with
// every entry >= 0.02, 2000 audit points, no loss separation.
CategoricalWorld DefaultWorld();

struct WorldSample {
  // Exact log-likelihood-ratio baseline score.
  std::vector<ScoreRecord> baseline_records;
  // Baseline score plus the weighted loss channel.
  std::vector<ScoreRecord> mia_records;
  // Raw target losses, for the O(1) comparator.
  std::vector<ScoreRecord> loss_records;
  double true_c = 0.0;
};

absl::StatusOr<WorldSample> MakeWorldSample(const CategoricalWorld& world,
                                            uint64_t seed);

}  // namespace leakaudit

#endif  // LEAKAUDIT_SIM_WORLD_H_
