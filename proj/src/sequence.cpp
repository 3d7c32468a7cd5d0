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

#include "dbwalk/sequence.hpp"

#include <istream>
#include <set>
#include <string>

#include "dbwalk/errors.hpp"
#include "dbwalk/limits.hpp"

namespace dbwalk {

KString::KString(Alphabet alphabet, std::vector<Symbol> symbols)
    : symbols_(std::move(symbols)), alphabet_(alphabet) {
  if (symbols_.empty()) throw DomainError("k-string must have order >= 1");
  for (Symbol s : symbols_) {
    if (!alphabet_.contains(s)) {
      throw DomainError("symbol " + std::to_string(s) + " outside alphabet of size " +
                        std::to_string(alphabet_.size()));
    }
  }
}

KString KString::parse(std::string_view text, Alphabet alphabet) {
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto s = alphabet.decode(text[i]);
    if (!s) {
      throw DecodeError("invalid symbol '" + std::string(1, text[i]) + "' at position " +
                            std::to_string(i) + " for alphabet size " +
                            std::to_string(alphabet.size()),
                        i);
    }
    symbols.push_back(*s);
  }
  return KString(alphabet, std::move(symbols));
}

KString KString::shifted(Symbol symbol) const {
  std::vector<Symbol> next(symbols_.begin() + 1, symbols_.end());
  next.push_back(symbol);
  return KString(alphabet_, std::move(next));
}

std::string KString::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out.push_back(alphabet_.render(s));
  return out;
}

CyclicSequence::CyclicSequence(Alphabet alphabet, std::vector<Symbol> symbols)
    : symbols_(std::move(symbols)), alphabet_(alphabet) {
  if (symbols_.empty()) throw DomainError("sequence must be non-empty");
  for (Symbol s : symbols_) {
    if (!alphabet_.contains(s)) {
      throw DomainError("symbol " + std::to_string(s) + " outside alphabet of size " +
                        std::to_string(alphabet_.size()));
    }
  }
}

KString CyclicSequence::window(std::size_t start, int len) const {
  std::vector<Symbol> out;
  out.reserve(static_cast<std::size_t>(len));
  for (int j = 0; j < len; ++j) out.push_back(at(start + static_cast<std::size_t>(j)));
  return KString(alphabet_, std::move(out));
}

CyclicSequence CyclicSequence::rotated(std::size_t offset) const {
  std::vector<Symbol> out;
  out.reserve(symbols_.size());
  for (std::size_t i = 0; i < symbols_.size(); ++i) out.push_back(at(offset + i));
  return CyclicSequence(alphabet_, std::move(out));
}

std::string CyclicSequence::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out.push_back(alphabet_.render(s));
  return out;
}

CyclicSequence parse_sequence(std::string_view text, int alphabet_size) {
  Alphabet alphabet(alphabet_size);
  if (text.empty()) throw DomainError("sequence text is empty");
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto s = alphabet.decode(text[i]);
    if (!s) {
      throw DecodeError("invalid symbol '" + std::string(1, text[i]) + "' at position " +
                            std::to_string(i) + " for alphabet size " +
                            std::to_string(alphabet_size),
                        i);
    }
    symbols.push_back(*s);
  }
  return CyclicSequence(alphabet, std::move(symbols));
}

std::vector<CyclicSequence> read_sequences(std::istream& in, int alphabet_size) {
  std::vector<CyclicSequence> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    out.push_back(parse_sequence(line, alphabet_size));
  }
  return out;
}

KString cycle_shift(const KString& s) { return s.shifted(s.front()); }

std::vector<KString> de_bruijn_shift_successors(const KString& s) {
  std::vector<KString> out;
  const int a = s.alphabet().size();
  out.reserve(static_cast<std::size_t>(a - 1));
  for (int x = 0; x < a; ++x) {
    if (x != s.front()) out.push_back(s.shifted(static_cast<Symbol>(x)));
  }
  return out;
}

std::vector<KString> successors(const KString& s) {
  std::vector<KString> out;
  const int a = s.alphabet().size();
  out.reserve(static_cast<std::size_t>(a));
  for (int x = 0; x < a; ++x) out.push_back(s.shifted(static_cast<Symbol>(x)));
  return out;
}

KTour k_tour(const CyclicSequence& d, int k) {
  if (k < 1) throw DomainError("order must be >= 1");
  if (d.length() < static_cast<std::size_t>(k)) {
    throw DomainError("sequence shorter than order (length " + std::to_string(d.length()) +
                      ", order " + std::to_string(k) + ")");
  }
  KTour tour{d, k, {}};
  tour.windows.reserve(d.length());
  for (std::size_t i = 0; i < d.length(); ++i) tour.windows.push_back(d.window(i, k));
  return tour;
}

bool is_de_bruijn_sequence(const CyclicSequence& s, int k) {
  if (k < 1) return false;
  auto expected = bounded_pow(static_cast<std::uint64_t>(s.alphabet().size()), static_cast<std::uint64_t>(k));
  if (!expected || *expected != s.length()) return false;
  std::set<KString> seen;
  for (std::size_t i = 0; i < s.length(); ++i) {
    if (!seen.insert(s.window(i, k)).second) return false;
  }
  return true;
}

}  // namespace dbwalk
