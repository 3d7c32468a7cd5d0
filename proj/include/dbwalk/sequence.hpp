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
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dbwalk/alphabet.hpp"

namespace dbwalk {

// A word of fixed length k >= 1 over an alphabet; labels one vertex of a
// de Bruijn graph. Ordered lexicographically by symbol.
class KString {
 public:
  KString(Alphabet alphabet, std::vector<Symbol> symbols);

  static KString parse(std::string_view text, Alphabet alphabet);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  int order() const noexcept { return static_cast<int>(symbols_.size()); }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol front() const { return symbols_.front(); }
  Symbol back() const { return symbols_.back(); }

  // Drops the first symbol and appends `symbol`.
  KString shifted(Symbol symbol) const;

  std::string str() const;

  friend bool operator==(const KString&, const KString&) = default;
  friend auto operator<=>(const KString&, const KString&) = default;

 private:
  std::vector<Symbol> symbols_;
  Alphabet alphabet_;
};

// A non-empty symbol string indexed modulo its length.
class CyclicSequence {
 public:
  CyclicSequence(Alphabet alphabet, std::vector<Symbol> symbols);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t length() const noexcept { return symbols_.size(); }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  Symbol at(std::size_t i) const noexcept { return symbols_[i % symbols_.size()]; }

  // The length-`len` word starting at cyclic position `start`.
  KString window(std::size_t start, int len) const;

  // Same cycle read from position `offset`.
  CyclicSequence rotated(std::size_t offset) const;

  std::string str() const;

  friend bool operator==(const CyclicSequence&, const CyclicSequence&) = default;
  friend auto operator<=>(const CyclicSequence&, const CyclicSequence&) = default;

 private:
  std::vector<Symbol> symbols_;
  Alphabet alphabet_;
};

// All n cyclic windows of length `order` of `source`, starting at position 0.
struct KTour {
  CyclicSequence source;
  int order;
  std::vector<KString> windows;
};

// Decodes canonical symbol characters. Throws DecodeError naming the first
// bad position, or DomainError for empty text.
CyclicSequence parse_sequence(std::string_view text, int alphabet_size);

// Reads the line format: one sequence per line, '#' starts a comment line,
// blank lines ignored.
std::vector<CyclicSequence> read_sequences(std::istream& in, int alphabet_size);

KString cycle_shift(const KString& s);

// The a-1 left shifts that append a symbol other than the dropped one, in
// symbol order.
std::vector<KString> de_bruijn_shift_successors(const KString& s);

// All a left shifts of `s`, appended symbol in canonical order.
std::vector<KString> successors(const KString& s);

// Throws DomainError("sequence shorter than order") when |d| < k.
KTour k_tour(const CyclicSequence& d, int k);

// Length a^k and every k-window distinct. Never throws for bad lengths.
bool is_de_bruijn_sequence(const CyclicSequence& s, int k);

// Offset r minimising the rotation starting at r lexicographically (the
// smallest such r). Quadratic; inputs here are short.
template <typename T>
std::size_t least_rotation_offset(std::span<const T> items) {
  const std::size_t n = items.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const T& lhs = items[(r + i) % n];
      const T& rhs = items[(best + i) % n];
      if (lhs < rhs) {
        best = r;
        break;
      }
      if (rhs < lhs) break;
    }
  }
  return best;
}

}  // namespace dbwalk
