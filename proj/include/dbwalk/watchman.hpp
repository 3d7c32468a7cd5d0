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
#include <vector>

#include "dbwalk/digraph.hpp"
#include "dbwalk/limits.hpp"
#include "dbwalk/sequence.hpp"

namespace dbwalk {

// a^(k-1), the watchman number of G(a, k). Requires k >= 2.
std::uint64_t watchman_number_formula(int a, int k);

// The closed walk through the k-tour of an order-(k-1) de Bruijn sequence
// `seed` (gen_fkm(a, k-1) when absent). Vertex ids index
// build_de_bruijn_graph(a, k).
Walk theorem_walk(int a, int k, const std::optional<CyclicSequence>& seed = std::nullopt,
                  const Limits& limits = {});

// Closed walk through the k-tour windows of `d` in tour order, repeats
// included; length |d|. `g` must contain every window (normally
// generated_subdigraph(d, k)).
Walk induced_walk(const Digraph& g, const CyclicSequence& d, int k);
Walk induced_walk(const CyclicSequence& d, int k);

struct SolveResult {
  // Arcs in a minimum closed dominating walk.
  std::size_t optimum_length;
  // Lexicographically least canonical rotation among optimal walks.
  Walk witness;
  // States expanded by the search, for diagnostics only.
  std::uint64_t explored_states;
};

// Exact minimum closed dominating walk. Breadth-first search over
// (vertex, dominated set) from each start vertex. Returns nullopt when no
// closed dominating walk exists. Throws ResourceError above
// limits.max_vertices and DomainError for an empty graph.
std::optional<SolveResult> solve_min_walk(const Digraph& g, const Limits& limits = {});

// Every closed dominating walk of exactly `length` arcs, one per rotation
// class, each in canonical rotation, sorted.
std::vector<Walk> enumerate_min_walks(const Digraph& g, std::size_t length,
                                      const Limits& limits = {});

}  // namespace dbwalk
