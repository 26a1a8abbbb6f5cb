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

#include "leakaudit/sim/world.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "absl/strings/str_cat.h"
#include "leakaudit/random.h"
#include "leakaudit/status_macros.h"

namespace leakaudit {
namespace {

// Score for symbols the data distribution never produces. Finite so records
// stay valid, and below any log-ratio of representable probabilities.
constexpr double kImpossibleSymbolScore = -1e300;

constexpr uint64_t kDefaultWorldSeed = 20240611;

absl::Status ValidateDistribution(std::span<const double> p,
                                  std::string_view name) {
  if (p.empty()) {
    return absl::InvalidArgumentError(absl::StrCat(std::string(name), " is empty"));
  }
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= 0.0 && v <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat(std::string(name), " has an entry outside [0, 1]: ", v));
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    return absl::InvalidArgumentError(
        absl::StrCat(std::string(name), " sums to ", sum, ", not 1"));
  }
  return absl::OkStatus();
}

}  // namespace

absl::Status CategoricalWorld::Validate() const {
  RETURN_IF_ERROR(ValidateDistribution(p_data, "p_data"));
  RETURN_IF_ERROR(ValidateDistribution(p_gen, "p_gen"));
  if (p_data.size() != p_gen.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("p_data has ", p_data.size(), " symbols but p_gen has ",
                     p_gen.size()));
  }
  for (double v : p_gen) {
    if (v <= 0.0) {
      return absl::InvalidArgumentError(
          "p_gen must be strictly positive on every symbol");
    }
  }
  if (!(loss_separation >= 0.0) || !std::isfinite(loss_separation)) {
    return absl::InvalidArgumentError("loss separation must be >= 0");
  }
  if (!(loss_noise > 0.0) || !std::isfinite(loss_noise)) {
    return absl::InvalidArgumentError("loss noise must be > 0");
  }
  if (!(mia_weight >= 0.0) || !std::isfinite(mia_weight)) {
    return absl::InvalidArgumentError("mia weight must be >= 0");
  }
  if (audit_size < 1) {
    return absl::InvalidArgumentError("audit size must be >= 1");
  }
  return absl::OkStatus();
}

absl::StatusOr<double> TrueCloseness(std::span<const double> p_data,
                                     std::span<const double> p_gen) {
  if (p_data.size() != p_gen.size()) {
    return absl::InvalidArgumentError("distributions differ in support size");
  }
  double c = 0.0;
  for (size_t k = 0; k < p_data.size(); ++k) {
    if (p_data[k] <= 0.0) continue;
    if (p_gen[k] <= 0.0) {
      return absl::FailedPreconditionError(absl::StrCat(
          "infinite closeness: symbol ", k, " has p_data = ", p_data[k],
          " but p_gen = 0"));
    }
    c = std::max(c, std::log(p_data[k] / p_gen[k]));
  }
  return c;
}

absl::StatusOr<double> TrueCloseness(const CategoricalWorld& world) {
  return TrueCloseness(world.p_data, world.p_gen);
}

absl::StatusOr<std::vector<double>> PerturbedGenerator(
    std::span<const double> p_data, double concentration, double min_entry,
    uint64_t seed) {
  RETURN_IF_ERROR(ValidateDistribution(p_data, "p_data"));
  if (!(concentration > 0.0)) {
    return absl::InvalidArgumentError("concentration must be > 0");
  }
  if (!(min_entry >= 0.0) ||
      min_entry * static_cast<double>(p_data.size()) >= 1.0) {
    return absl::InvalidArgumentError("min entry is infeasible");
  }
  std::mt19937_64 engine = SeededEngine(seed);
  std::vector<double> out(p_data.size());
  for (int attempt = 0; attempt < 10000; ++attempt) {
    double sum = 0.0;
    for (size_t k = 0; k < p_data.size(); ++k) {
      const double alpha = std::max(concentration * p_data[k], 1e-3);
      std::gamma_distribution<double> gamma(alpha, 1.0);
      out[k] = gamma(engine);
      sum += out[k];
    }
    if (!(sum > 0.0)) continue;
    for (double& v : out) v /= sum;
    if (*std::min_element(out.begin(), out.end()) >= min_entry) return out;
  }
  return absl::InternalError(
      "could not draw a generator satisfying the minimum entry");
}

CategoricalWorld DefaultWorld() {
  CategoricalWorld world;
  world.p_data.assign(8, 1.0 / 8.0);
  world.p_gen =
      PerturbedGenerator(world.p_data, 50.0, 0.02, kDefaultWorldSeed).value();
  world.audit_size = 2000;
  return world;
}

absl::StatusOr<WorldSample> MakeWorldSample(const CategoricalWorld& world,
                                            uint64_t seed) {
  RETURN_IF_ERROR(world.Validate());
  WorldSample sample;
  ASSIGN_OR_RETURN(sample.true_c, TrueCloseness(world));

  std::vector<double> log_ratio(world.p_data.size());
  for (size_t k = 0; k < log_ratio.size(); ++k) {
    log_ratio[k] = world.p_data[k] > 0.0
                       ? std::log(world.p_data[k] / world.p_gen[k])
                       : kImpossibleSymbolScore;
  }
  std::mt19937_64 engine = SeededEngine(seed);
  std::discrete_distribution<size_t> from_data(world.p_data.begin(),
                                               world.p_data.end());
  std::discrete_distribution<size_t> from_gen(world.p_gen.begin(),
                                              world.p_gen.end());
  std::normal_distribution<double> noise(0.0, world.loss_noise);

  const auto n = static_cast<size_t>(world.audit_size);
  sample.baseline_records.reserve(n);
  sample.mia_records.reserve(n);
  sample.loss_records.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    const bool member = FlipFairCoin(engine);
    const size_t symbol = member ? from_data(engine) : from_gen(engine);
    const double loss =
        (member ? -world.loss_separation : 0.0) + noise(engine);
    const double base = log_ratio[symbol];
    const double mia = base + world.mia_weight * (-loss) / world.loss_noise;
    std::string id = absl::StrCat("x", i);
    sample.baseline_records.push_back({id, base, member});
    sample.mia_records.push_back({id, mia, member});
    sample.loss_records.push_back({std::move(id), loss, member});
  }
  return sample;
}

}  // namespace leakaudit
