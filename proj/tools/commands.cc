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

#include "commands.h"

#include <algorithm>
#include <cmath>
#include <filesystem>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "leakaudit/io/score_file.h"
#include "leakaudit/io/svg_plot.h"
#include "leakaudit/o1/o1_auditor.h"
#include "leakaudit/oracles/oracles.h"
#include "leakaudit/sim/harness.h"
#include "leakaudit/stats/tail.h"
#include "leakaudit/status_macros.h"

namespace leakaudit::cli {
namespace {

using nlohmann::json;

absl::StatusOr<std::vector<ScoreRecord>> Load(
    const std::string& path, const std::optional<std::string>& format) {
  std::optional<ScoreFormat> fmt;
  if (format) {
    ASSIGN_OR_RETURN(fmt, ParseScoreFormat(*format));
  }
  return LoadScores(path, fmt);
}

absl::Status WritePlots(const std::string& dir,
                        std::span<const ScoreRecord> baseline,
                        std::span<const ScoreRecord> mia,
                        const AuditConfig& config) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot create plot directory '", dir, "': ", ec.message()));
  }
  ASSIGN_OR_RETURN(std::vector<CurvePoint> base_curve,
                   BoundCurve(baseline, config, TestMode::kBaseline));
  ASSIGN_OR_RETURN(std::vector<CurvePoint> mia_curve,
                   BoundCurve(mia, config, TestMode::kMia));
  auto series = [](std::string label, const std::vector<CurvePoint>& curve,
                   bool bound) {
    PlotSeries s{std::move(label), {}};
    for (const CurvePoint& p : curve) {
      s.points.emplace_back(p.stat.recall, bound ? p.bound : p.stat.precision);
    }
    return s;
  };
  const std::vector<PlotSeries> pr = {series("baseline", base_curve, false),
                                      series("mia", mia_curve, false)};
  RETURN_IF_ERROR(WriteLineChartSvg(
      (std::filesystem::path(dir) / "precision_recall.svg").string(),
      {"Precision vs recall", "recall", "precision"}, pr));
  const std::vector<PlotSeries> bounds = {
      series("c_lb (baseline)", base_curve, true),
      series("{c+eps}_lb (mia)", mia_curve, true)};
  return WriteLineChartSvg(
      (std::filesystem::path(dir) / "bound_vs_recall.svg").string(),
      {"Rejected parameter vs recall", "recall", "lower bound"}, bounds);
}

}  // namespace

absl::StatusOr<std::vector<double>> ParseDoubleList(const std::string& text) {
  std::vector<double> out;
  for (absl::string_view piece : absl::StrSplit(text, ',', absl::SkipEmpty())) {
    double v = 0.0;
    if (!absl::SimpleAtod(absl::StripAsciiWhitespace(piece), &v) ||
        !std::isfinite(v)) {
      return absl::InvalidArgumentError(
          absl::StrCat("'", piece, "' is not a number in list '", text, "'"));
    }
    out.push_back(v);
  }
  if (out.empty()) {
    return absl::InvalidArgumentError(absl::StrCat("empty list '", text, "'"));
  }
  return out;
}

absl::StatusOr<ResultDocument> RunAudit(const AuditArgs& args) {
  RETURN_IF_ERROR(args.config.Validate());
  ASSIGN_OR_RETURN(std::vector<ScoreRecord> baseline,
                   Load(args.baseline_path, args.format));
  ASSIGN_OR_RETURN(std::vector<ScoreRecord> mia,
                   Load(args.mia_path, args.format));
  ASSIGN_OR_RETURN(AuditResult result, Measure(baseline, mia, args.config));
  if (args.plot_dir) {
    RETURN_IF_ERROR(WritePlots(*args.plot_dir, baseline, mia, args.config));
  }
  ResultDocument doc;
  doc.kind = "audit";
  doc.payload = result;
  doc.config = args.config;
  doc.config["baseline_file"] = args.baseline_path;
  doc.config["mia_file"] = args.mia_path;
  return doc;
}

absl::StatusOr<ResultDocument> RunO1(const O1Args& args) {
  ASSIGN_OR_RETURN(std::vector<ScoreRecord> records,
                   Load(args.scores_path, args.format));
  ASSIGN_OR_RETURN(O1Result result,
                   O1Measure(records, args.grid_size, args.beta, args.param_cap));
  ResultDocument doc;
  doc.kind = "o1";
  doc.payload = result;
  doc.config = json{{"scores_file", args.scores_path},
                    {"grid", args.grid_size},
                    {"beta", args.beta},
                    {"param_cap", args.param_cap},
                    {"delta", 0.0}};
  return doc;
}

absl::StatusOr<CategoricalWorld> BuildWorld(const SimulateArgs& args) {
  CategoricalWorld world;
  if (args.preset == "default") {
    world = DefaultWorld();
    if (args.p_data || args.p_gen) {
      return absl::InvalidArgumentError(
          "--p-data/--p-gen need --preset custom");
    }
  } else if (args.preset == "custom") {
    if (!args.p_data || !args.p_gen) {
      return absl::InvalidArgumentError(
          "--preset custom needs --p-data and --p-gen");
    }
    ASSIGN_OR_RETURN(world.p_data, ParseDoubleList(*args.p_data));
    ASSIGN_OR_RETURN(world.p_gen, ParseDoubleList(*args.p_gen));
  } else {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown preset '", args.preset, "' (want default|custom)"));
  }
  if (args.separation) world.loss_separation = *args.separation;
  if (args.noise) world.loss_noise = *args.noise;
  if (args.mia_weight) world.mia_weight = *args.mia_weight;
  if (args.audit_size) world.audit_size = *args.audit_size;
  RETURN_IF_ERROR(world.Validate());
  return world;
}

absl::StatusOr<ResultDocument> RunSimulate(const SimulateArgs& args) {
  RETURN_IF_ERROR(args.config.Validate());
  ASSIGN_OR_RETURN(CategoricalWorld world, BuildWorld(args));
  ASSIGN_OR_RETURN(ValidityReport validity,
                   ValidityTrials(world, args.trials, args.config, args.seed));
  json payload = {{"world", world},
                  {"true_c", validity.true_c},
                  {"validity", validity},
                  {"validity_cap",
                   args.config.beta +
                       2.0 * std::sqrt(args.config.beta * (1 - args.config.beta) /
                                       static_cast<double>(args.trials))}};
  if (args.sweep) {
    ASSIGN_OR_RETURN(std::vector<double> sigmas, ParseDoubleList(*args.sweep));
    std::vector<double> separations;
    for (double s : sigmas) separations.push_back(s * world.loss_noise);
    ASSIGN_OR_RETURN(std::vector<SweepLevel> levels,
                     LeakageSweep(world, separations, args.sweep_trials,
                                  args.config, args.seed));
    payload["sweep"] = levels;
    payload["sweep_trials"] = args.sweep_trials;
  }
  ResultDocument doc;
  doc.kind = "simulate";
  doc.payload = std::move(payload);
  doc.config = args.config;
  doc.config["preset"] = args.preset;
  doc.config["trials"] = args.trials;
  doc.seed = args.seed;
  return doc;
}

absl::Status RunValidateBounds(const ValidateArgs& args, ResultDocument& doc) {
  doc.kind = "validate-bounds";
  doc.seed = args.seed;
  doc.config = json{{"trials", args.trials}};
  bool all_ok = true;
  json payload;

  // Exact binomial tail vs rational enumeration.
  {
    double worst = 0.0;
    int64_t cases = 0;
    for (int r = 0; r <= oracles::kMaxEnumerationTrials; ++r) {
      for (int tenth = 1; tenth <= 9; ++tenth) {
        const oracles::Rational p(tenth, 10);
        for (int v = 0; v <= r + 1; ++v) {
          ASSIGN_OR_RETURN(oracles::Rational exact,
                           oracles::EnumerateTail(r, p, v));
          ASSIGN_OR_RETURN(double got, BinomialTail({r, tenth / 10.0, v}));
          worst = std::max(worst, std::abs(got - oracles::ToDouble(exact)));
          ++cases;
        }
      }
    }
    const bool ok = worst <= 1e-12;
    all_ok &= ok;
    payload["binomial_vs_enumeration"] = {
        {"cases", cases}, {"max_abs_error", worst}, {"tolerance", 1e-12},
        {"pass", ok}};
  }
  // Relaxed tail vs LP vertex enumeration.
  {
    double worst = 0.0;
    int64_t cases = 0;
    for (int r = 0; r <= oracles::kMaxLpSize; ++r) {
      for (int m = 0; m <= oracles::kMaxLpSize; ++m) {
        for (int tenth : {1, 3, 5, 7, 9}) {
          const oracles::Rational p(tenth, 10);
          for (int v = 0; v <= r + m + 1; ++v) {
            for (int quarter = 0; quarter <= 4 * m; ++quarter) {
              const double mu = quarter / 4.0;
              ASSIGN_OR_RETURN(double lp,
                               oracles::LpWorstFailure(r, p, v, mu, m));
              ASSIGN_OR_RETURN(double got,
                               RelaxedTail({r, tenth / 10.0, v}, {mu, m}));
              worst = std::max(worst, std::abs(got - lp));
              ++cases;
            }
          }
        }
      }
    }
    const bool ok = worst <= 1e-9;
    all_ok &= ok;
    payload["relaxed_vs_lp"] = {
        {"cases", cases}, {"max_abs_error", worst}, {"tolerance", 1e-9},
        {"pass", ok}};
  }
  // All-correct closed form.
  {
    json rows = json::array();
    for (int64_t r : {10, 100, 1000}) {
      const double level = 0.025;
      ASSIGN_OR_RETURN(SolvedParam solved,
                       SolveMaxRejectedParam(r, r, level, {}, BoundKind::kExact));
      const double expected = oracles::AllCorrectClosedForm(r, level);
      const bool ok = std::abs(solved.value - expected) <= 1e-6;
      all_ok &= ok;
      rows.push_back({{"guesses", r}, {"level", level}, {"solved", solved.value},
                      {"closed_form", expected}, {"pass", ok}});
    }
    payload["all_correct_closed_form"] = rows;
  }
  // Soundness of c_lb in the default simulated world.
  {
    const CategoricalWorld world = DefaultWorld();
    AuditConfig config;
    ASSIGN_OR_RETURN(ValidityReport report,
                     ValidityTrials(world, args.trials, config, args.seed));
    const double cap =
        config.beta + 2.0 * std::sqrt(config.beta * (1.0 - config.beta) /
                                      static_cast<double>(args.trials));
    const bool ok = report.rate <= cap;
    all_ok &= ok;
    payload["soundness"] = {{"report", report}, {"cap", cap}, {"pass", ok}};
  }
  payload["all_passed"] = all_ok;
  doc.payload = std::move(payload);
  if (!all_ok) return absl::InternalError("one or more bound checks failed");
  return absl::OkStatus();
}

int ExitCodeFor(const absl::Status& status) {
  if (status.ok()) return 0;
  switch (status.code()) {
    case absl::StatusCode::kInternal:
    case absl::StatusCode::kUnknown:
      return 2;
    default:
      return 1;
  }
}

}  // namespace leakaudit::cli
