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

#include "dbwalk/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "dbwalk/errors.hpp"
#include "dbwalk/generators.hpp"

namespace dbwalk {

std::string to_string(Provenance::Kind kind) {
  switch (kind) {
    case Provenance::Kind::DeBruijn:
      return "de_bruijn";
    case Provenance::Kind::Generated:
      return "generated";
    case Provenance::Kind::Custom:
      return "custom";
  }
  return "custom";
}

namespace {

bool is_left_shift(const KString& from, const KString& to) {
  auto f = from.symbols();
  auto t = to.symbols();
  return std::equal(f.begin() + 1, f.end(), t.begin());
}

}  // namespace

Digraph::Digraph(Alphabet alphabet, int order, std::vector<KString> labels,
                 std::vector<Arc> arcs, Provenance provenance)
    : alphabet_(alphabet), order_(order), provenance_(std::move(provenance)) {
  if (order < 1) throw DomainError("graph order must be >= 1");
  if (provenance_.kind == Provenance::Kind::Generated && !provenance_.source) {
    throw DomainError("generated provenance needs a source sequence");
  }
  for (const auto& label : labels) {
    if (label.order() != order || label.alphabet() != alphabet) {
      throw DomainError("vertex label " + label.str() + " does not match order " +
                        std::to_string(order) + " / alphabet size " +
                        std::to_string(alphabet.size()));
    }
  }

  std::vector<VertexId> perm(labels.size());
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::sort(perm.begin(), perm.end(),
            [&](VertexId x, VertexId y) { return labels[x] < labels[y]; });
  std::vector<VertexId> new_index(labels.size());
  labels_.reserve(labels.size());
  for (VertexId i = 0; i < perm.size(); ++i) {
    new_index[perm[i]] = i;
    labels_.push_back(std::move(labels[perm[i]]));
  }
  for (std::size_t i = 1; i < labels_.size(); ++i) {
    if (labels_[i - 1] == labels_[i]) {
      throw DomainError("duplicate vertex label " + labels_[i].str());
    }
  }

  arcs_.reserve(arcs.size());
  for (const Arc& arc : arcs) {
    if (arc.from >= labels_.size() || arc.to >= labels_.size()) {
      throw DomainError("arc [" + std::to_string(arc.from) + "," + std::to_string(arc.to) +
                        "] references a missing vertex");
    }
    arcs_.push_back({new_index[arc.from], new_index[arc.to]});
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (auto dup = std::adjacent_find(arcs_.begin(), arcs_.end()); dup != arcs_.end()) {
    throw DomainError("duplicate arc " + labels_[dup->from].str() + "->" +
                      labels_[dup->to].str());
  }

  out_.assign(labels_.size(), {});
  in_.assign(labels_.size(), {});
  for (const Arc& arc : arcs_) {
    if (provenance_.kind != Provenance::Kind::Custom &&
        !is_left_shift(labels_[arc.from], labels_[arc.to])) {
      throw DomainError("arc " + labels_[arc.from].str() + "->" + labels_[arc.to].str() +
                        " is not a left shift");
    }
    out_[arc.from].push_back(arc.to);
    in_[arc.to].push_back(arc.from);
  }
  for (auto& list : in_) std::sort(list.begin(), list.end());
}

std::optional<VertexId> Digraph::find(const KString& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

VertexId Digraph::index_of(const KString& label) const {
  auto v = find(label);
  if (!v) throw DomainError("unknown vertex " + label.str());
  return *v;
}

std::size_t Digraph::max_out_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : out_) best = std::max(best, list.size());
  return best;
}

bool Digraph::has_arc(VertexId from, VertexId to) const {
  if (from >= out_.size()) return false;
  const auto& list = out_[from];
  return std::binary_search(list.begin(), list.end(), to);
}

Walk Walk::closed(std::vector<VertexId> vertices) {
  if (vertices.empty()) throw DomainError("closed walk needs at least one vertex");
  return Walk(std::move(vertices), true, false);
}

Walk Walk::open(std::vector<VertexId> vertices) {
  if (vertices.empty()) throw DomainError("walk needs at least one vertex");
  return Walk(std::move(vertices), false, false);
}

Walk Walk::stationary(VertexId v) { return Walk({v}, true, true); }

std::size_t Walk::length() const noexcept {
  if (stationary_) return 0;
  return closed_ ? vertices_.size() : vertices_.size() - 1;
}

Walk canonical_rotation(const Walk& walk) {
  if (!walk.is_closed() || walk.is_stationary()) return walk;
  auto vs = walk.vertices();
  const std::size_t offset = least_rotation_offset(vs);
  std::vector<VertexId> out;
  out.reserve(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) out.push_back(vs[(offset + i) % vs.size()]);
  return Walk::closed(std::move(out));
}

std::string walk_labels(const Digraph& g, const Walk& walk, std::string_view separator) {
  std::string out;
  bool first = true;
  for (VertexId v : walk.vertices()) {
    if (!first) out += separator;
    out += g.label(v).str();
    first = false;
  }
  return out;
}

Digraph build_de_bruijn_graph(int a, int k, const Limits& limits) {
  const auto size = checked_sequence_size(a, k, limits);
  Alphabet alphabet(a);
  std::vector<KString> labels;
  labels.reserve(size);
  std::vector<Symbol> digits(static_cast<std::size_t>(k), 0);
  for (std::uint64_t code = 0; code < size; ++code) {
    std::uint64_t rest = code;
    for (int i = k - 1; i >= 0; --i) {
      digits[static_cast<std::size_t>(i)] = static_cast<Symbol>(rest % static_cast<std::uint64_t>(a));
      rest /= static_cast<std::uint64_t>(a);
    }
    labels.emplace_back(alphabet, digits);
  }
  std::vector<Arc> arcs;
  arcs.reserve(size * static_cast<std::uint64_t>(a));
  for (std::uint64_t u = 0; u < size; ++u) {
    const std::uint64_t base = (u * static_cast<std::uint64_t>(a)) % size;
    for (int x = 0; x < a; ++x) arcs.push_back({u, base + static_cast<std::uint64_t>(x)});
  }
  return Digraph(alphabet, k, std::move(labels), std::move(arcs),
                 Provenance{Provenance::Kind::DeBruijn, std::nullopt});
}

Digraph generated_subdigraph(const CyclicSequence& d, int k) {
  const KTour tour = k_tour(d, k);
  std::set<KString> vertices;
  for (const KString& window : tour.windows) {
    vertices.insert(window);
    for (auto& next : successors(window)) vertices.insert(std::move(next));
  }
  std::vector<KString> labels(vertices.begin(), vertices.end());
  std::vector<Arc> arcs;
  for (VertexId u = 0; u < labels.size(); ++u) {
    for (const KString& next : successors(labels[u])) {
      auto it = std::lower_bound(labels.begin(), labels.end(), next);
      if (it != labels.end() && *it == next) {
        arcs.push_back({u, static_cast<VertexId>(it - labels.begin())});
      }
    }
  }
  return Digraph(d.alphabet(), k, std::move(labels), std::move(arcs),
                 Provenance{Provenance::Kind::Generated, d});
}

std::vector<VertexId> closed_out_neighborhood(const Digraph& g, VertexId v) {
  if (v >= g.vertex_count()) {
    throw DomainError("unknown vertex index " + std::to_string(v));
  }
  auto out = g.out_neighbors(v);
  std::vector<VertexId> result(out.begin(), out.end());
  auto it = std::lower_bound(result.begin(), result.end(), v);
  if (it == result.end() || *it != v) result.insert(it, v);
  return result;
}

bool is_dominating_set(const Digraph& g, std::span<const VertexId> set) {
  std::vector<bool> covered(g.vertex_count(), false);
  for (VertexId v : set) {
    if (v >= g.vertex_count()) return false;
    covered[v] = true;
    for (VertexId u : g.out_neighbors(v)) covered[u] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

bool is_closed_dominating_walk(const Digraph& g, const Walk& walk) {
  if (!walk.is_closed()) return false;
  auto vs = walk.vertices();
  for (VertexId v : vs) {
    if (v >= g.vertex_count()) return false;
  }
  if (!walk.is_stationary()) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (!g.has_arc(vs[i], vs[(i + 1) % vs.size()])) return false;
    }
  }
  return is_dominating_set(g, vs);
}

std::string to_dot(const Digraph& g, const std::optional<Walk>& highlight) {
  std::set<Arc> bold;
  std::set<VertexId> on_walk;
  if (highlight) {
    auto vs = highlight->vertices();
    for (VertexId v : vs) {
      if (v >= g.vertex_count()) throw DomainError("highlighted walk does not belong to graph");
      on_walk.insert(v);
    }
    if (!highlight->is_stationary()) {
      const std::size_t steps = highlight->is_closed() ? vs.size() : vs.size() - 1;
      for (std::size_t i = 0; i < steps; ++i) {
        Arc arc{vs[i], vs[(i + 1) % vs.size()]};
        if (!g.has_arc(arc.from, arc.to)) {
          throw DomainError("highlighted walk uses missing arc " + g.label(arc.from).str() +
                            "->" + g.label(arc.to).str());
        }
        bold.insert(arc);
      }
    }
  }

  std::ostringstream out;
  out << "digraph G {\n";
  out << "  node [shape=ellipse];\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  \"" << g.label(v).str() << "\"";
    if (on_walk.count(v)) out << " [style=bold]";
    out << ";\n";
  }
  for (const Arc& arc : g.arcs()) {
    out << "  \"" << g.label(arc.from).str() << "\" -> \"" << g.label(arc.to).str() << "\"";
    if (bold.count(arc)) {
      out << " [color=black, style=bold];\n";
    } else {
      out << " [color=grey];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace dbwalk
