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

#include "dbwalk/alphabet.hpp"

#include <string>

#include "dbwalk/errors.hpp"

namespace dbwalk {
namespace {
constexpr char kDigits[] = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";
}  // namespace

Alphabet::Alphabet(int size) : size_(size) {
  if (size < kMinSize || size > kMaxSize) {
    throw DomainError("alphabet size must be in 2..36, got " + std::to_string(size));
  }
}

char Alphabet::render(Symbol symbol) const {
  if (!contains(symbol)) {
    throw DomainError("symbol " + std::to_string(symbol) + " outside alphabet of size " +
                      std::to_string(size_));
  }
  return kDigits[symbol];
}

std::optional<Symbol> Alphabet::decode(char c) const noexcept {
  int value = -1;
  if (c >= '0' && c <= '9') {
    value = c - '0';
  } else if (c >= 'A' && c <= 'Z') {
    value = 10 + (c - 'A');
  }
  if (!contains(value)) return std::nullopt;
  return static_cast<Symbol>(value);
}

}  // namespace dbwalk
