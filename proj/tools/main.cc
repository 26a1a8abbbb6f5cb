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

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.h"
#include "leakaudit/io/result_document.h"

namespace {

using leakaudit::AuditConfig;
using leakaudit::ResultDocument;
namespace cli = leakaudit::cli;

struct ConfigFlags {
  std::string bound = "exact";
  bool no_union_bound = false;
  bool union_over_audit_size = false;
};

void AddConfigFlags(CLI::App* cmd, AuditConfig& config, ConfigFlags& flags) {
  cmd->add_option("--beta", config.beta, "total confidence budget")
      ->capture_default_str();
  cmd->add_option("--gamma", config.gamma, "generator relaxation")
      ->capture_default_str();
  cmd->add_option("--delta", config.delta, "approximate-DP relaxation")
      ->capture_default_str();
  cmd->add_option("--bound", flags.bound, "tail bound: exact|hoeffding")
      ->capture_default_str();
  cmd->add_flag("--no-union-bound", flags.no_union_bound,
                "test every threshold at beta/2 without correction");
  cmd->add_flag("--union-over-audit-size", flags.union_over_audit_size,
                "divide beta by the audit size m instead of the tests run");
  cmd->add_option("--recall-min", config.recall_window.min)->capture_default_str();
  cmd->add_option("--recall-max", config.recall_window.max)->capture_default_str();
  cmd->add_option("--param-cap", config.param_cap)->capture_default_str();
  cmd->add_flag("--baseline-delta-budget", config.baseline_budget_from_delta,
                "use 2*m*delta as the baseline failure mean when delta > 0");
}

absl::Status FinishConfig(AuditConfig& config, const ConfigFlags& flags) {
  auto kind = leakaudit::ParseBoundKind(flags.bound);
  if (!kind.ok()) return kind.status();
  config.bound_kind = *kind;
  config.union_bound = !flags.no_union_bound;
  if (flags.union_over_audit_size) {
    config.union_denominator = leakaudit::UnionDenominator::kAuditSize;
  }
  return config.Validate();
}

int Emit(const ResultDocument& doc, const std::optional<std::string>& out) {
  if (!out) {
    std::cout << leakaudit::SerializeResult(doc);
    return 0;
  }
  const absl::Status st = leakaudit::WriteResult(doc, *out);
  if (!st.ok()) {
    std::cerr << "error: " << st.message() << "\n";
    return cli::ExitCodeFor(st);
  }
  return 0;
}

int Fail(const absl::Status& status) {
  std::cerr << "error: " << status.message() << "\n";
  return cli::ExitCodeFor(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Retraining-free privacy leakage measurement"};
  app.require_subcommand(1);
  std::optional<std::string> out;

  cli::AuditArgs audit;
  ConfigFlags audit_flags;
  CLI::App* audit_cmd =
      app.add_subcommand("audit", "measure c_lb, {c+eps}_lb and eps_tilde");
  audit_cmd->add_option("--baseline", audit.baseline_path, "baseline scores")
      ->required();
  audit_cmd->add_option("--mia", audit.mia_path, "attack scores")->required();
  audit_cmd->add_option("--format", audit.format, "jsonl|csv (default: by extension)");
  audit_cmd->add_option("--out", out, "result document path (default stdout)");
  audit_cmd->add_option("--plot", audit.plot_dir, "directory for SVG curves");
  AddConfigFlags(audit_cmd, audit.config, audit_flags);

  cli::O1Args o1;
  CLI::App* o1_cmd =
      app.add_subcommand("o1", "two-threshold abstention O(1) auditor on losses");
  o1_cmd->add_option("--scores", o1.scores_path, "loss scores")->required();
  o1_cmd->add_option("--format", o1.format, "jsonl|csv (default: by extension)");
  o1_cmd->add_option("--grid", o1.grid_size, "quantile grid size")
      ->capture_default_str();
  o1_cmd->add_option("--beta", o1.beta)->capture_default_str();
  o1_cmd->add_option("--param-cap", o1.param_cap)->capture_default_str();
  o1_cmd->add_option("--out", out, "result document path (default stdout)");

  cli::SimulateArgs sim;
  ConfigFlags sim_flags;
  CLI::App* sim_cmd =
      app.add_subcommand("simulate", "Monte Carlo audits in a synthetic world");
  sim_cmd->add_option("--preset", sim.preset, "default|custom")
      ->capture_default_str();
  sim_cmd->add_option("--p-data", sim.p_data, "comma-separated data probabilities");
  sim_cmd->add_option("--p-gen", sim.p_gen,
                      "comma-separated generator probabilities");
  sim_cmd->add_option("--separation", sim.separation, "member loss shift");
  sim_cmd->add_option("--noise", sim.noise, "loss standard deviation");
  sim_cmd->add_option("--mia-weight", sim.mia_weight, "loss channel weight");
  sim_cmd->add_option("--m", sim.audit_size, "audit set size");
  sim_cmd->add_option("--trials", sim.trials, "validity games")->required();
  sim_cmd->add_option("--seed", sim.seed)->required();
  sim_cmd->add_option("--sweep", sim.sweep,
                      "loss separations in units of noise, e.g. \"0,0.5,1,2\"");
  sim_cmd->add_option("--sweep-trials", sim.sweep_trials)->capture_default_str();
  sim_cmd->add_option("--out", out, "report path")->required();
  AddConfigFlags(sim_cmd, sim.config, sim_flags);

  cli::ValidateArgs validate;
  CLI::App* validate_cmd = app.add_subcommand(
      "validate-bounds", "oracle-equivalence and soundness self-checks");
  validate_cmd->add_option("--trials", validate.trials)->required();
  validate_cmd->add_option("--seed", validate.seed)->required();
  validate_cmd->add_option("--out", out, "report path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (*audit_cmd) {
    if (auto st = FinishConfig(audit.config, audit_flags); !st.ok()) return Fail(st);
    auto doc = cli::RunAudit(audit);
    if (!doc.ok()) return Fail(doc.status());
    return Emit(*doc, out);
  }
  if (*o1_cmd) {
    auto doc = cli::RunO1(o1);
    if (!doc.ok()) return Fail(doc.status());
    return Emit(*doc, out);
  }
  if (*sim_cmd) {
    if (auto st = FinishConfig(sim.config, sim_flags); !st.ok()) return Fail(st);
    auto doc = cli::RunSimulate(sim);
    if (!doc.ok()) return Fail(doc.status());
    return Emit(*doc, out);
  }
  ResultDocument doc;
  const absl::Status st = cli::RunValidateBounds(validate, doc);
  if (!st.ok() && doc.payload.is_null()) return Fail(st);
  if (const int code = Emit(doc, out); code != 0) return code;
  if (!st.ok()) return Fail(st);
  return 0;
}
