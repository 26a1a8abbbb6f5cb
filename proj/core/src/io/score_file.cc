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

#include "leakaudit/io/score_file.h"

#include <charconv>
#include <cmath>
#include <fstream>

#include "absl/container/flat_hash_set.h"
#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_replace.h"
#include "nlohmann/json.hpp"
#include "leakaudit/status_macros.h"

namespace leakaudit {
namespace {

using nlohmann::json;

absl::Status RowError(absl::string_view source, size_t line,
                      absl::string_view column, absl::string_view what) {
  return absl::InvalidArgumentError(
      absl::StrCat(std::string(source), ":", line, ": column '",
                   std::string(column), "': ", std::string(what)));
}

std::optional<double> ParseFiniteDouble(absl::string_view text) {
  text = absl::StripAsciiWhitespace(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::optional<bool> ParseMemberText(absl::string_view text) {
  const std::string lower = absl::AsciiStrToLower(absl::StripAsciiWhitespace(text));
  if (lower == "true") return true;
  if (lower == "false") return false;
  if (auto v = ParseFiniteDouble(lower)) {
    if (*v == 1.0) return true;
    if (*v == 0.0) return false;
  }
  return std::nullopt;
}

// Splits one CSV line, honoring double-quoted fields with "" escapes.
absl::StatusOr<std::vector<std::string>> SplitCsv(absl::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back().push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back().push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back().push_back(c);
    }
  }
  if (quoted) return absl::InvalidArgumentError("unterminated quoted field");
  return fields;
}

absl::StatusOr<ScoreRecord> RecordFromJson(const json& row,
                                           absl::string_view source,
                                           size_t line) {
  if (!row.is_object()) {
    return RowError(source, line, "*", "expected a JSON object");
  }
  ScoreRecord rec;
  auto id = row.find("id");
  if (id == row.end()) return RowError(source, line, "id", "missing");
  if (id->is_string()) {
    rec.id = id->get<std::string>();
  } else if (id->is_number_integer()) {
    rec.id = id->dump();
  } else {
    return RowError(source, line, "id", "must be a string or integer");
  }

  auto score = row.find("score");
  if (score == row.end()) return RowError(source, line, "score", "missing");
  std::optional<double> value;
  if (score->is_number()) {
    value = score->get<double>();
    if (!std::isfinite(*value)) value.reset();
  } else if (score->is_string()) {
    value = ParseFiniteDouble(score->get<std::string>());
  }
  if (!value) {
    return RowError(source, line, "score",
                    absl::StrCat("not a finite number: ", score->dump()));
  }
  rec.score = *value;

  auto member = row.find("member");
  if (member == row.end()) return RowError(source, line, "member", "missing");
  std::optional<bool> bit;
  if (member->is_boolean()) {
    bit = member->get<bool>();
  } else if (member->is_number()) {
    const double v = member->get<double>();
    if (v == 0.0 || v == 1.0) bit = v == 1.0;
  } else if (member->is_string()) {
    bit = ParseMemberText(member->get<std::string>());
  }
  if (!bit) {
    return RowError(source, line, "member",
                    absl::StrCat("expected true/false or 0/1, got ",
                                 member->dump()));
  }
  rec.member = *bit;
  return rec;
}

absl::StatusOr<std::vector<ScoreRecord>> ParseJsonl(std::istream& in,
                                                    absl::string_view source) {
  std::vector<ScoreRecord> out;
  std::string text;
  for (size_t line = 1; std::getline(in, text); ++line) {
    if (absl::StripAsciiWhitespace(text).empty()) continue;
    json row = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (row.is_discarded()) {
      return RowError(source, line, "*", "malformed JSON");
    }
    ASSIGN_OR_RETURN(ScoreRecord rec, RecordFromJson(row, source, line));
    out.push_back(std::move(rec));
  }
  return out;
}

absl::StatusOr<std::vector<ScoreRecord>> ParseCsv(std::istream& in,
                                                  absl::string_view source) {
  std::string text;
  size_t line = 0;
  int id_col = -1;
  int score_col = -1;
  int member_col = -1;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (absl::StripAsciiWhitespace(text).empty()) continue;
    ASSIGN_OR_RETURN(std::vector<std::string> header, SplitCsv(text));
    for (size_t i = 0; i < header.size(); ++i) {
      const std::string name =
          absl::AsciiStrToLower(absl::StripAsciiWhitespace(header[i]));
      if (name == "id") id_col = static_cast<int>(i);
      if (name == "score") score_col = static_cast<int>(i);
      if (name == "member") member_col = static_cast<int>(i);
    }
    break;
  }
  if (id_col < 0 || score_col < 0 || member_col < 0) {
    return absl::InvalidArgumentError(absl::StrCat(
        std::string(source), ":", line, ": CSV header must name id, score and member"));
  }
  const size_t needed =
      static_cast<size_t>(std::max({id_col, score_col, member_col})) + 1;

  std::vector<ScoreRecord> out;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (absl::StripAsciiWhitespace(text).empty()) continue;
    auto fields = SplitCsv(text);
    if (!fields.ok()) {
      return RowError(source, line, "*", fields.status().message());
    }
    if (fields->size() < needed) {
      return RowError(source, line, "*",
                      absl::StrCat("expected at least ", needed, " fields, got ",
                                   fields->size()));
    }
    ScoreRecord rec;
    rec.id = std::string(absl::StripAsciiWhitespace((*fields)[id_col]));
    if (rec.id.empty()) return RowError(source, line, "id", "empty");
    auto score = ParseFiniteDouble((*fields)[score_col]);
    if (!score) {
      return RowError(source, line, "score",
                      absl::StrCat("not a finite number: '",
                                   (*fields)[score_col], "'"));
    }
    rec.score = *score;
    auto bit = ParseMemberText((*fields)[member_col]);
    if (!bit) {
      return RowError(source, line, "member",
                      absl::StrCat("expected true/false or 0/1, got '",
                                   (*fields)[member_col], "'"));
    }
    rec.member = *bit;
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

ScoreFormat FormatFromPath(absl::string_view path) {
  return absl::EndsWithIgnoreCase(path, ".csv") ? ScoreFormat::kCsv
                                                : ScoreFormat::kJsonl;
}

absl::StatusOr<ScoreFormat> ParseScoreFormat(absl::string_view name) {
  if (name == "jsonl") return ScoreFormat::kJsonl;
  if (name == "csv") return ScoreFormat::kCsv;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown score format '", std::string(name), "' (want jsonl|csv)"));
}

absl::StatusOr<std::vector<ScoreRecord>> ParseScores(std::istream& in,
                                                     ScoreFormat format,
                                                     absl::string_view source) {
  ASSIGN_OR_RETURN(std::vector<ScoreRecord> records,
                   format == ScoreFormat::kCsv ? ParseCsv(in, source)
                                               : ParseJsonl(in, source));
  absl::flat_hash_set<std::string> ids;
  ids.reserve(records.size());
  for (const ScoreRecord& r : records) {
    if (!ids.insert(r.id).second) {
      return absl::InvalidArgumentError(
          absl::StrCat(std::string(source), ": duplicate id '", r.id, "'"));
    }
  }
  return records;
}

absl::StatusOr<std::vector<ScoreRecord>> LoadScores(
    const std::string& path, std::optional<ScoreFormat> format) {
  std::ifstream in(path);
  if (!in) {
    return absl::NotFoundError(absl::StrCat("cannot open score file '", path, "'"));
  }
  return ParseScores(in, format.value_or(FormatFromPath(path)), path);
}

absl::Status WriteScores(const std::string& path,
                         std::span<const ScoreRecord> records,
                         ScoreFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot write score file '", path, "'"));
  }
  if (format == ScoreFormat::kCsv) {
    out << "id,score,member\n";
    for (const ScoreRecord& r : records) {
      json score = r.score;
      out << '"' << absl::StrReplaceAll(r.id, {{"\"", "\"\""}}) << "\","
          << score.dump() << ',' << (r.member ? 1 : 0)
          << '\n';
    }
  } else {
    for (const ScoreRecord& r : records) {
      json row = {{"id", r.id}, {"score", r.score}, {"member", r.member}};
      out << row.dump() << '\n';
    }
  }
  out.flush();
  if (!out) {
    return absl::DataLossError(absl::StrCat("failed writing '", path, "'"));
  }
  return absl::OkStatus();
}

}  // namespace leakaudit
