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

#ifndef LEAKAUDIT_IO_SCORE_FILE_H_
#define LEAKAUDIT_IO_SCORE_FILE_H_

#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "leakaudit/audit/records.h"

namespace leakaudit {

// JSONL is canonical: one {"id": ..., "score": ..., "member": ...} object per
// line. CSV needs a header naming the id, score and member columns.
enum class ScoreFormat { kJsonl, kCsv };

// ".csv" selects CSV; anything else is read as JSONL.
ScoreFormat FormatFromPath(absl::string_view path);
absl::StatusOr<ScoreFormat> ParseScoreFormat(absl::string_view name);

// `source` names the input in error messages ("<source>:<line>: ...").
absl::StatusOr<std::vector<ScoreRecord>> ParseScores(std::istream& in,
                                                     ScoreFormat format,
                                                     absl::string_view source);

absl::StatusOr<std::vector<ScoreRecord>> LoadScores(
    const std::string& path, std::optional<ScoreFormat> format = std::nullopt);

absl::Status WriteScores(const std::string& path,
                         std::span<const ScoreRecord> records,
                         ScoreFormat format = ScoreFormat::kJsonl);

}  // namespace leakaudit

#endif  // LEAKAUDIT_IO_SCORE_FILE_H_
