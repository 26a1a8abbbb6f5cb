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

#ifndef LEAKAUDIT_RANDOM_H_
#define LEAKAUDIT_RANDOM_H_

#include <cstdint>
#include <random>

namespace leakaudit {

// Engine for substream `stream` of a user seed. Substreams make trial results
// independent of the order in which trials are executed.
inline std::mt19937_64 SeededEngine(uint64_t seed, uint64_t stream = 0) {
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(stream),
                    static_cast<uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

// Fair coin from the top bit of the engine output. std::bernoulli_distribution
// is implementation-defined; this is not.
inline bool FlipFairCoin(std::mt19937_64& engine) { return (engine() >> 63) != 0; }

}  // namespace leakaudit

#endif  // LEAKAUDIT_RANDOM_H_
