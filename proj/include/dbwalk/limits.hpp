// Copyright 2026 The dbwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

namespace dbwalk {

// Size caps guarding generators, graph builders and the exact oracle.
struct Limits {
  // Largest a^k accepted by generators and graph builders.
  std::uint64_t max_sequence = 4096;
  // Largest vertex count accepted by the exact oracle.
  std::size_t max_vertices = 24;

  // The oracle packs a dominated-set into a 64-bit key alongside a vertex
  // index, so this is a hard ceiling on max_vertices.
  static constexpr std::size_t kOracleHardMax = 32;

  // Defaults overridden by WATCHMAN_MAX_SEQ / WATCHMAN_MAX_VERTICES.
  static Limits from_environment();
};

// a^k, or nullopt when the result exceeds `ceiling` (or overflows).
std::optional<std::uint64_t> bounded_pow(std::uint64_t a, std::uint64_t k,
                                         std::uint64_t ceiling = UINT64_MAX);

}  // namespace dbwalk
