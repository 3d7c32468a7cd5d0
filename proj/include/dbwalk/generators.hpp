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
#include <functional>
#include <span>

#include "dbwalk/limits.hpp"
#include "dbwalk/sequence.hpp"

namespace dbwalk {

// Calls `visit` once per necklace of length n over an alphabet of size a
// (the lexicographically least member of each rotation class), in
// increasing lexicographic order.
void for_each_necklace(int a, std::size_t n,
                       const std::function<void(std::span<const Symbol>)>& visit);

// The lexicographically least de Bruijn sequence of order k: concatenation of
// the Lyndon words whose length divides k, in lexicographic order.
CyclicSequence gen_fkm(int a, int k, const Limits& limits = {});

// Prefer-smallest greedy seeded with k copies of the largest symbol: append
// the smallest symbol whose new k-window has not been seen, stop when stuck,
// keep the first a^k symbols.
CyclicSequence gen_greedy(int a, int k, const Limits& limits = {});

// Throws DomainError/ResourceError unless 2 <= a <= 36, k >= 1 and
// a^k <= limits.max_sequence. Returns a^k.
std::uint64_t checked_sequence_size(int a, int k, const Limits& limits);

}  // namespace dbwalk
