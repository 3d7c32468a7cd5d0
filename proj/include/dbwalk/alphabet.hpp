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

#include <compare>
#include <cstdint>
#include <optional>

namespace dbwalk {

using Symbol = std::uint8_t;

// Symbol set {0, ..., size-1}, rendered as 0-9 then A-Z.
class Alphabet {
 public:
  static constexpr int kMinSize = 2;
  static constexpr int kMaxSize = 36;

  explicit Alphabet(int size);

  int size() const noexcept { return size_; }
  bool contains(int symbol) const noexcept { return symbol >= 0 && symbol < size_; }

  char render(Symbol symbol) const;
  std::optional<Symbol> decode(char c) const noexcept;

  friend auto operator<=>(const Alphabet&, const Alphabet&) = default;

 private:
  int size_;
};

}  // namespace dbwalk
