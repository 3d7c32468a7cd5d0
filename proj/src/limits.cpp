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

#include "dbwalk/limits.hpp"

#include <cstdlib>
#include <string>

#include "dbwalk/errors.hpp"

namespace dbwalk {
namespace {

std::optional<std::uint64_t> read_positive(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(raw, &used);
  } catch (const std::exception&) {
    throw DomainError(std::string(name) + " must be a positive integer");
  }
  if (used != std::string(raw).size() || value == 0) {
    throw DomainError(std::string(name) + " must be a positive integer");
  }
  return value;
}

}  // namespace

Limits Limits::from_environment() {
  Limits limits;
  if (auto seq = read_positive("WATCHMAN_MAX_SEQ")) limits.max_sequence = *seq;
  if (auto verts = read_positive("WATCHMAN_MAX_VERTICES")) {
    if (*verts > kOracleHardMax) {
      throw ResourceError("WATCHMAN_MAX_VERTICES may not exceed " +
                          std::to_string(kOracleHardMax));
    }
    limits.max_vertices = static_cast<std::size_t>(*verts);
  }
  return limits;
}

std::optional<std::uint64_t> bounded_pow(std::uint64_t a, std::uint64_t k,
                                         std::uint64_t ceiling) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (a != 0 && result > ceiling / a) return std::nullopt;
    result *= a;
  }
  if (result > ceiling) return std::nullopt;
  return result;
}

}  // namespace dbwalk
