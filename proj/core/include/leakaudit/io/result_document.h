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

// JSON result documents written by the command-line tool. Every document
// carries the schema version, the tool version, the seed (when one was used)
// and a full echo of the configuration, so each number can be reproduced
// from the document alone. Object keys are emitted in sorted order.

#ifndef LEAKAUDIT_IO_RESULT_DOCUMENT_H_
#define LEAKAUDIT_IO_RESULT_DOCUMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "leakaudit/audit/audit_engine.h"
#include "leakaudit/o1/o1_auditor.h"
#include "leakaudit/sim/harness.h"
#include "leakaudit/sim/world.h"
#include "nlohmann/json.hpp"

namespace leakaudit {

inline constexpr std::string_view kResultSchemaVersion = "leakaudit.result/1";
inline constexpr std::string_view kToolVersion = "0.3.0";

struct ResultDocument {
  std::string schema_version{kResultSchemaVersion};
  // "audit", "o1", "simulate" or "validate-bounds".
  std::string kind;
  nlohmann::json payload;
  nlohmann::json config;
  std::optional<uint64_t> seed;
  std::string tool_version{kToolVersion};

  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

nlohmann::json ToJson(const ResultDocument& doc);
absl::StatusOr<ResultDocument> ResultDocumentFromJson(const nlohmann::json& j);

std::string SerializeResult(const ResultDocument& doc);
absl::Status WriteResult(const ResultDocument& doc, const std::string& path);
absl::StatusOr<ResultDocument> ReadResult(const std::string& path);

// Non-finite doubles (O(1) thresholds may be +-inf) are stored as the strings
// "inf", "-inf" and "nan".
nlohmann::json JsonDouble(double v);
double DoubleFromJson(const nlohmann::json& j);

// ADL hooks for nlohmann::json. from_json throws nlohmann::json::exception on
// malformed input; ResultDocumentFromJson converts that into a status.
void to_json(nlohmann::json& j, const AuditConfig& c);
void from_json(const nlohmann::json& j, AuditConfig& c);
void to_json(nlohmann::json& j, const BoundEstimate& b);
void from_json(const nlohmann::json& j, BoundEstimate& b);
void to_json(nlohmann::json& j, const AuditResult& r);
void from_json(const nlohmann::json& j, AuditResult& r);
void to_json(nlohmann::json& j, const O1Result& r);
void from_json(const nlohmann::json& j, O1Result& r);
void to_json(nlohmann::json& j, const ValidityReport& r);
void from_json(const nlohmann::json& j, ValidityReport& r);
void to_json(nlohmann::json& j, const SweepLevel& s);
void from_json(const nlohmann::json& j, SweepLevel& s);
void to_json(nlohmann::json& j, const CategoricalWorld& w);
void from_json(const nlohmann::json& j, CategoricalWorld& w);

}  // namespace leakaudit

#endif  // LEAKAUDIT_IO_RESULT_DOCUMENT_H_
