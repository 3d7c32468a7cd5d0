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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dbwalk/limits.hpp"
#include "dbwalk/sequence.hpp"

namespace dbwalk {

using VertexId = std::size_t;

struct Arc {
  VertexId from;
  VertexId to;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Where a digraph came from. Non-custom digraphs only contain left-shift arcs.
struct Provenance {
  enum class Kind { DeBruijn, Generated, Custom };

  Kind kind = Kind::Custom;
  // Set for Kind::Generated.
  std::optional<CyclicSequence> source;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

std::string to_string(Provenance::Kind kind);

// Immutable vertex-labelled digraph over k-strings. Vertices are kept in
// lexicographic label order; arcs form a set (no parallel arcs, loops allowed)
// indexed both ways.
class Digraph {
 public:
  // Sorts `labels`, remaps `arcs` accordingly and validates: labels distinct,
  // all of order k over `alphabet`, arc endpoints in range, and for
  // non-custom provenance every arc is a left shift.
  Digraph(Alphabet alphabet, int order, std::vector<KString> labels, std::vector<Arc> arcs,
          Provenance provenance);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  int order() const noexcept { return order_; }
  const Provenance& provenance() const noexcept { return provenance_; }

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  const KString& label(VertexId v) const { return labels_.at(v); }
  std::span<const KString> labels() const noexcept { return labels_; }
  // Sorted by (from, to).
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  std::optional<VertexId> find(const KString& label) const;
  // Throws DomainError for an unknown label.
  VertexId index_of(const KString& label) const;

  // Sorted neighbour lists.
  std::span<const VertexId> out_neighbors(VertexId v) const { return out_.at(v); }
  std::span<const VertexId> in_neighbors(VertexId v) const { return in_.at(v); }
  std::size_t max_out_degree() const noexcept;

  bool has_arc(VertexId from, VertexId to) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  Alphabet alphabet_;
  int order_;
  std::vector<KString> labels_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  Provenance provenance_;
};

// A vertex sequence in some digraph. Closed walks return from the last
// vertex to the first; their length is the vertex count. The stationary walk
// is the closed walk of length 0 that never moves.
class Walk {
 public:
  static Walk closed(std::vector<VertexId> vertices);
  static Walk open(std::vector<VertexId> vertices);
  static Walk stationary(VertexId v);

  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  bool is_closed() const noexcept { return closed_; }
  bool is_stationary() const noexcept { return stationary_; }

  // Number of arcs traversed.
  std::size_t length() const noexcept;

  friend bool operator==(const Walk&, const Walk&) = default;
  friend auto operator<=>(const Walk&, const Walk&) = default;

 private:
  Walk(std::vector<VertexId> vertices, bool closed, bool stationary)
      : vertices_(std::move(vertices)), closed_(closed), stationary_(stationary) {}

  std::vector<VertexId> vertices_;
  bool closed_;
  bool stationary_;
};

// Lexicographically least rotation of a closed walk's vertex sequence; other
// walks are returned unchanged.
Walk canonical_rotation(const Walk& walk);

// Labels of the walk's vertices, joined by `separator`.
std::string walk_labels(const Digraph& g, const Walk& walk, std::string_view separator = ",");

// G(a, k): all a^k k-strings, u -> v whenever v is a left shift of u.
Digraph build_de_bruijn_graph(int a, int k, const Limits& limits = {});

// Distinct k-tour windows of `d` plus all their successors, with every
// left-shift arc among those vertices.
Digraph generated_subdigraph(const CyclicSequence& d, int k);

// {v} plus its out-neighbours, sorted.
std::vector<VertexId> closed_out_neighborhood(const Digraph& g, VertexId v);

bool is_dominating_set(const Digraph& g, std::span<const VertexId> set);

// Closed, every step (including the wrap) an arc, visited set dominating.
// Malformed walks are rejected, never thrown on.
bool is_closed_dominating_walk(const Digraph& g, const Walk& walk);

// Hierholzer's algorithm from the lowest vertex with an out-arc, always
// taking the smallest unused out-arc first. Throws DomainError when some
// vertex is unbalanced, the arcs are not connected, or there are no arcs.
Walk eulerian_circuit(const Digraph& g);

// Appended symbols along an Eulerian circuit of G(a, k-1). For k = 1 the
// circuit runs over the single-vertex graph G(a, 0), giving 0 1 ... a-1.
CyclicSequence gen_eulerian(int a, int k, const Limits& limits = {});

// Deterministic Graphviz text. Arcs on `highlight` are bold black, the rest
// grey. Throws DomainError when the walk does not fit the graph.
std::string to_dot(const Digraph& g, const std::optional<Walk>& highlight = std::nullopt);

}  // namespace dbwalk
