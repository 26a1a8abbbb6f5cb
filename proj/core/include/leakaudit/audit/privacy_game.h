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

// The privacy game: for every index an independent fair coin picks either the
// real member candidate or the generated candidate, and the coin is kept as
// the secret membership bit the auditor must guess.

#ifndef LEAKAUDIT_AUDIT_PRIVACY_GAME_H_
#define LEAKAUDIT_AUDIT_PRIVACY_GAME_H_

#include <cstdint>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "leakaudit/random.h"

namespace leakaudit {

template <typename T>
struct PairedAuditSet {
  std::vector<T> member_pool;     // held-out samples from the real data
  std::vector<T> generated_pool;  // samples from the generator
  size_t size = 0;
};

template <typename T>
struct GameDraw {
  T item;
  bool member = false;
};

template <typename T>
absl::StatusOr<std::vector<GameDraw<T>>> RunPrivacyGame(
    const PairedAuditSet<T>& pairs, uint64_t seed) {
  if (pairs.member_pool.size() < pairs.size ||
      pairs.generated_pool.size() < pairs.size) {
    return absl::OutOfRangeError(absl::StrCat(
        "audit size ", pairs.size, " exceeds pool sizes (members ",
        pairs.member_pool.size(), ", generated ", pairs.generated_pool.size(),
        ")"));
  }
  std::mt19937_64 engine = SeededEngine(seed);
  std::vector<GameDraw<T>> out;
  out.reserve(pairs.size);
  for (size_t i = 0; i < pairs.size; ++i) {
    const bool s = FlipFairCoin(engine);
    out.push_back({s ? pairs.member_pool[i] : pairs.generated_pool[i], s});
  }
  return out;
}

}  // namespace leakaudit

#endif  // LEAKAUDIT_AUDIT_PRIVACY_GAME_H_
