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

#include "dbwalk/generators.hpp"

#include <string>
#include <vector>

#include "dbwalk/errors.hpp"

namespace dbwalk {
namespace {

// Ruskey-Savage-Wang recursion over prenecklaces a[1..n]; `emit` receives
// each prenecklace with the length p of its longest Lyndon prefix.
class PrenecklaceWalker {
 public:
  PrenecklaceWalker(int a, std::size_t n,
                    const std::function<void(std::span<const Symbol>, std::size_t)>& emit)
      : a_(a), n_(n), word_(n + 1, 0), emit_(emit) {}

  void run() { step(1, 1); }

 private:
  void step(std::size_t t, std::size_t p) {
    if (t > n_) {
      emit_(std::span<const Symbol>(word_).subspan(1), p);
      return;
    }
    word_[t] = word_[t - p];
    step(t + 1, p);
    for (int j = word_[t - p] + 1; j < a_; ++j) {
      word_[t] = static_cast<Symbol>(j);
      step(t + 1, t);
    }
  }

  int a_;
  std::size_t n_;
  std::vector<Symbol> word_;
  const std::function<void(std::span<const Symbol>, std::size_t)>& emit_;
};

}  // namespace

std::uint64_t checked_sequence_size(int a, int k, const Limits& limits) {
  Alphabet alphabet(a);
  (void)alphabet;
  if (k < 1) throw DomainError("order must be >= 1, got " + std::to_string(k));
  auto size = bounded_pow(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(k),
                          limits.max_sequence);
  if (!size) {
    throw ResourceError(std::to_string(a) + "^" + std::to_string(k) +
                        " exceeds the sequence cap of " + std::to_string(limits.max_sequence) +
                        " (WATCHMAN_MAX_SEQ)");
  }
  return *size;
}

void for_each_necklace(int a, std::size_t n,
                       const std::function<void(std::span<const Symbol>)>& visit) {
  if (n == 0) return;
  std::function<void(std::span<const Symbol>, std::size_t)> emit =
      [&](std::span<const Symbol> word, std::size_t p) {
        if (n % p == 0) visit(word);
      };
  PrenecklaceWalker(a, n, emit).run();
}

CyclicSequence gen_fkm(int a, int k, const Limits& limits) {
  const auto size = checked_sequence_size(a, k, limits);
  std::vector<Symbol> out;
  out.reserve(size);
  std::function<void(std::span<const Symbol>, std::size_t)> emit =
      [&](std::span<const Symbol> word, std::size_t p) {
        if (static_cast<std::size_t>(k) % p == 0) {
          out.insert(out.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(p));
        }
      };
  PrenecklaceWalker(a, static_cast<std::size_t>(k), emit).run();
  return CyclicSequence(Alphabet(a), std::move(out));
}

CyclicSequence gen_greedy(int a, int k, const Limits& limits) {
  const auto size = checked_sequence_size(a, k, limits);
  const auto top = static_cast<Symbol>(a - 1);
  // Windows are tracked by their base-a value; the high digit is dropped on
  // every shift.
  const std::uint64_t high = size / static_cast<std::uint64_t>(a);
  std::vector<bool> seen(size, false);
  std::vector<Symbol> linear(static_cast<std::size_t>(k), top);
  std::uint64_t code = size - 1;
  seen[code] = true;
  while (true) {
    const std::uint64_t base = (code % high) * static_cast<std::uint64_t>(a);
    bool extended = false;
    for (int x = 0; x < a; ++x) {
      const std::uint64_t next = base + static_cast<std::uint64_t>(x);
      if (!seen[next]) {
        seen[next] = true;
        code = next;
        linear.push_back(static_cast<Symbol>(x));
        extended = true;
        break;
      }
    }
    if (!extended) break;
  }
  if (linear.size() < size) {
    throw InvariantViolation("greedy generator stopped early");
  }
  linear.resize(size);
  return CyclicSequence(Alphabet(a), std::move(linear));
}

}  // namespace dbwalk
