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

#include "leakaudit/io/result_document.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "leakaudit/status_macros.h"

namespace leakaudit {

using nlohmann::json;

json JsonDouble(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double DoubleFromJson(const json& j) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    throw json::type_error::create(302, "expected number or inf/-inf/nan", j);
  }
  return j.get<double>();
}

void to_json(json& j, const AuditConfig& c) {
  j = json{
      {"beta", c.beta},
      {"gamma", c.gamma},
      {"delta", c.delta},
      {"bound", std::string(BoundKindName(c.bound_kind))},
      {"union_bound", c.union_bound},
      {"union_denominator",
       c.union_denominator == UnionDenominator::kAuditSize ? "audit_size"
                                                           : "tests_performed"},
      {"recall_min", c.recall_window.min},
      {"recall_max", c.recall_window.max},
      {"param_cap", c.param_cap},
      {"baseline_budget_from_delta", c.baseline_budget_from_delta},
  };
}

void from_json(const json& j, AuditConfig& c) {
  c.beta = j.at("beta").get<double>();
  c.gamma = j.at("gamma").get<double>();
  c.delta = j.at("delta").get<double>();
  auto kind = ParseBoundKind(j.at("bound").get<std::string>());
  if (!kind.ok()) {
    throw json::other_error::create(501, std::string(kind.status().message()), j);
  }
  c.bound_kind = *kind;
  c.union_bound = j.at("union_bound").get<bool>();
  c.union_denominator = j.at("union_denominator").get<std::string>() == "audit_size"
                            ? UnionDenominator::kAuditSize
                            : UnionDenominator::kTestsPerformed;
  c.recall_window.min = j.at("recall_min").get<double>();
  c.recall_window.max = j.at("recall_max").get<double>();
  c.param_cap = j.at("param_cap").get<double>();
  c.baseline_budget_from_delta = j.at("baseline_budget_from_delta").get<bool>();
}

void to_json(json& j, const BoundEstimate& b) {
  j = json{
      {"value", b.value},
      {"capped", b.capped},
      {"witness_threshold", JsonDouble(b.witness_threshold)},
      {"witness_recall", b.witness_recall},
      {"witness_guesses", b.witness_guesses},
      {"witness_tp", b.witness_tp},
      {"per_test_level", b.per_test_level},
      {"tests_performed", b.tests_performed},
  };
}

void from_json(const json& j, BoundEstimate& b) {
  b.value = j.at("value").get<double>();
  b.capped = j.at("capped").get<bool>();
  b.witness_threshold = DoubleFromJson(j.at("witness_threshold"));
  b.witness_recall = j.at("witness_recall").get<double>();
  b.witness_guesses = j.at("witness_guesses").get<int64_t>();
  b.witness_tp = j.at("witness_tp").get<int64_t>();
  b.per_test_level = j.at("per_test_level").get<double>();
  b.tests_performed = j.at("tests_performed").get<int64_t>();
}

void to_json(json& j, const AuditResult& r) {
  j = json{
      {"c_lb", r.c_lb},
      {"c_plus_eps_lb", r.c_plus_eps_lb},
      {"eps_tilde", r.eps_tilde},
      {"config", r.config},
  };
}

void from_json(const json& j, AuditResult& r) {
  r.c_lb = j.at("c_lb").get<BoundEstimate>();
  r.c_plus_eps_lb = j.at("c_plus_eps_lb").get<BoundEstimate>();
  r.eps_tilde = j.at("eps_tilde").get<double>();
  r.config = j.at("config").get<AuditConfig>();
}

void to_json(json& j, const O1Result& r) {
  j = json{
      {"epsilon", r.epsilon},
      {"capped", r.capped},
      {"guesses", r.guesses},
      {"correct", r.correct},
      {"t_plus", JsonDouble(r.thresholds.t_plus)},
      {"t_minus", JsonDouble(r.thresholds.t_minus)},
      {"per_test_level", r.per_test_level},
      {"combos_tested", r.combos_tested},
  };
}

void from_json(const json& j, O1Result& r) {
  r.epsilon = j.at("epsilon").get<double>();
  r.capped = j.at("capped").get<bool>();
  r.guesses = j.at("guesses").get<int64_t>();
  r.correct = j.at("correct").get<int64_t>();
  r.thresholds.t_plus = DoubleFromJson(j.at("t_plus"));
  r.thresholds.t_minus = DoubleFromJson(j.at("t_minus"));
  r.per_test_level = j.at("per_test_level").get<double>();
  r.combos_tested = j.at("combos_tested").get<int64_t>();
}

void to_json(json& j, const ValidityReport& r) {
  j = json{{"trials", r.trials},
           {"false_rejections", r.false_rejections},
           {"rate", r.rate},
           {"true_c", r.true_c}};
}

void from_json(const json& j, ValidityReport& r) {
  r.trials = j.at("trials").get<int64_t>();
  r.false_rejections = j.at("false_rejections").get<int64_t>();
  r.rate = j.at("rate").get<double>();
  r.true_c = j.at("true_c").get<double>();
}

void to_json(json& j, const SweepLevel& s) {
  j = json{{"separation", s.separation},
           {"median_eps_tilde", s.median_eps_tilde}};
}

void from_json(const json& j, SweepLevel& s) {
  s.separation = j.at("separation").get<double>();
  s.median_eps_tilde = j.at("median_eps_tilde").get<double>();
}

void to_json(json& j, const CategoricalWorld& w) {
  j = json{{"p_data", w.p_data},
           {"p_gen", w.p_gen},
           {"loss_separation", w.loss_separation},
           {"loss_noise", w.loss_noise},
           {"mia_weight", w.mia_weight},
           {"audit_size", w.audit_size}};
}

void from_json(const json& j, CategoricalWorld& w) {
  w.p_data = j.at("p_data").get<std::vector<double>>();
  w.p_gen = j.at("p_gen").get<std::vector<double>>();
  w.loss_separation = j.at("loss_separation").get<double>();
  w.loss_noise = j.at("loss_noise").get<double>();
  w.mia_weight = j.at("mia_weight").get<double>();
  w.audit_size = j.at("audit_size").get<int64_t>();
}

json ToJson(const ResultDocument& doc) {
  return json{
      {"schema_version", doc.schema_version},
      {"kind", doc.kind},
      {"payload", doc.payload},
      {"config", doc.config},
      {"seed", doc.seed ? json(*doc.seed) : json(nullptr)},
      {"tool_version", doc.tool_version},
  };
}

absl::StatusOr<ResultDocument> ResultDocumentFromJson(const json& j) {
  try {
    ResultDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    if (doc.schema_version != kResultSchemaVersion) {
      return absl::InvalidArgumentError(absl::StrCat(
          "unsupported schema version '", doc.schema_version, "'"));
    }
    doc.kind = j.at("kind").get<std::string>();
    doc.payload = j.at("payload");
    doc.config = j.at("config");
    const json& seed = j.at("seed");
    if (!seed.is_null()) doc.seed = seed.get<uint64_t>();
    doc.tool_version = j.at("tool_version").get<std::string>();
    return doc;
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed result document: ", e.what()));
  }
}

std::string SerializeResult(const ResultDocument& doc) {
  return ToJson(doc).dump(2) + "\n";
}

absl::Status WriteResult(const ResultDocument& doc, const std::string& path) {
  const std::string text = SerializeResult(doc);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot open '", path, "' for writing"));
  }
  out << text;
  out.flush();
  if (!out) {
    return absl::DataLossError(absl::StrCat("failed writing '", path, "'"));
  }
  return absl::OkStatus();
}

absl::StatusOr<ResultDocument> ReadResult(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(absl::StrCat("cannot open '", path, "'"));
  }
  json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    return absl::InvalidArgumentError(
        absl::StrCat("'", path, "' is not valid JSON"));
  }
  return ResultDocumentFromJson(j);
}

}  // namespace leakaudit
