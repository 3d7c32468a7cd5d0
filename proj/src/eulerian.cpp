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

#include <algorithm>
#include <string>
#include <vector>

#include "dbwalk/digraph.hpp"
#include "dbwalk/errors.hpp"
#include "dbwalk/generators.hpp"

namespace dbwalk {

Walk eulerian_circuit(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  if (g.arc_count() == 0) throw DomainError("no Eulerian circuit: graph has no arcs");
  for (VertexId v = 0; v < n; ++v) {
    if (g.in_neighbors(v).size() != g.out_neighbors(v).size()) {
      throw DomainError("no Eulerian circuit: vertex " + g.label(v).str() + " has in-degree " +
                        std::to_string(g.in_neighbors(v).size()) + " but out-degree " +
                        std::to_string(g.out_neighbors(v).size()));
    }
  }

  VertexId start = 0;
  while (g.out_neighbors(start).empty()) ++start;

  // Balanced degrees plus weak connectivity of the arc-bearing vertices
  // gives strong connectivity.
  std::vector<bool> reached(n, false);
  std::vector<VertexId> frontier{start};
  reached[start] = true;
  while (!frontier.empty()) {
    VertexId v = frontier.back();
    frontier.pop_back();
    for (auto list : {g.out_neighbors(v), g.in_neighbors(v)}) {
      for (VertexId u : list) {
        if (!reached[u]) {
          reached[u] = true;
          frontier.push_back(u);
        }
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!reached[v] && !g.out_neighbors(v).empty()) {
      throw DomainError("no Eulerian circuit: arcs at vertex " + g.label(v).str() +
                        " are disconnected from vertex " + g.label(start).str());
    }
  }

  std::vector<std::size_t> next_arc(n, 0);
  std::vector<VertexId> stack{start};
  std::vector<VertexId> circuit;
  circuit.reserve(g.arc_count() + 1);
  while (!stack.empty()) {
    VertexId v = stack.back();
    auto out = g.out_neighbors(v);
    if (next_arc[v] < out.size()) {
      stack.push_back(out[next_arc[v]++]);
    } else {
      circuit.push_back(v);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  circuit.pop_back();  // equals circuit.front()
  return Walk::closed(std::move(circuit));
}

CyclicSequence gen_eulerian(int a, int k, const Limits& limits) {
  const auto size = checked_sequence_size(a, k, limits);
  if (k == 1) {
    // G(a, 0) is a single vertex with one loop per symbol; the smallest-arc
    // first circuit takes them in symbol order.
    std::vector<Symbol> out(size);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Symbol>(i);
    return CyclicSequence(Alphabet(a), std::move(out));
  }
  const Digraph g = build_de_bruijn_graph(a, k - 1, limits);
  const Walk circuit = eulerian_circuit(g);
  auto vs = circuit.vertices();
  std::vector<Symbol> out;
  out.reserve(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) out.push_back(g.label(vs[(i + 1) % vs.size()]).back());
  return CyclicSequence(Alphabet(a), std::move(out));
}

}  // namespace dbwalk
