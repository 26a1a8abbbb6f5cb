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

#ifndef LEAKAUDIT_TOOLS_COMMANDS_H_
#define LEAKAUDIT_TOOLS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "leakaudit/audit/audit_engine.h"
#include "leakaudit/io/result_document.h"
#include "leakaudit/sim/world.h"

namespace leakaudit::cli {

struct AuditArgs {
  std::string baseline_path;
  std::string mia_path;
  std::optional<std::string> format;
  AuditConfig config;
  std::optional<std::string> plot_dir;
};

struct O1Args {
  std::string scores_path;
  std::optional<std::string> format;
  int grid_size = 50;
  double beta = 0.05;
  double param_cap = kDefaultParamCap;
};

struct SimulateArgs {
  std::string preset = "default";
  std::optional<std::string> p_data;
  std::optional<std::string> p_gen;
  std::optional<double> separation;
  std::optional<double> noise;
  std::optional<double> mia_weight;
  std::optional<int64_t> audit_size;
  int64_t trials = 500;
  uint64_t seed = 0;
  std::optional<std::string> sweep;
  int64_t sweep_trials = 20;
  AuditConfig config;
};

struct ValidateArgs {
  int64_t trials = 500;
  uint64_t seed = 0;
};

absl::StatusOr<ResultDocument> RunAudit(const AuditArgs& args);
absl::StatusOr<ResultDocument> RunO1(const O1Args& args);
absl::StatusOr<ResultDocument> RunSimulate(const SimulateArgs& args);
// Fails with an internal error if any self-check fails, after filling `doc`.
absl::Status RunValidateBounds(const ValidateArgs& args, ResultDocument& doc);

absl::StatusOr<CategoricalWorld> BuildWorld(const SimulateArgs& args);
absl::StatusOr<std::vector<double>> ParseDoubleList(const std::string& text);

// 0 success, 1 input or validation error, 2 internal numerical failure.
int ExitCodeFor(const absl::Status& status);

}  // namespace leakaudit::cli

#endif  // LEAKAUDIT_TOOLS_COMMANDS_H_
