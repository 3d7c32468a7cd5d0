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

#include "dbwalk/watchman.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <string>
#include <unordered_set>

#include "dbwalk/errors.hpp"
#include "dbwalk/generators.hpp"

namespace dbwalk {

std::uint64_t watchman_number_formula(int a, int k) {
  Alphabet alphabet(a);
  (void)alphabet;
  if (k < 2) {
    throw DomainError("watchman number formula requires order >= 2, got " + std::to_string(k));
  }
  auto value = bounded_pow(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(k - 1));
  if (!value) throw ResourceError("a^(k-1) overflows 64 bits");
  return *value;
}

Walk theorem_walk(int a, int k, const std::optional<CyclicSequence>& seed, const Limits& limits) {
  if (k < 2) throw DomainError("theorem walk requires order >= 2, got " + std::to_string(k));
  const auto size = checked_sequence_size(a, k, limits);
  const CyclicSequence s = seed ? *seed : gen_fkm(a, k - 1, limits);
  if (s.alphabet().size() != a) {
    throw DomainError("seed sequence alphabet size " + std::to_string(s.alphabet().size()) +
                      " does not match " + std::to_string(a));
  }
  if (!is_de_bruijn_sequence(s, k - 1)) {
    throw DomainError("seed " + s.str() + " is not a de Bruijn sequence of order " +
                      std::to_string(k - 1));
  }
  // Vertices of G(a, k) are numbered by their base-a value.
  const KTour tour = k_tour(s, k);
  std::vector<VertexId> vertices;
  vertices.reserve(tour.windows.size());
  for (const KString& window : tour.windows) {
    std::uint64_t code = 0;
    for (Symbol x : window.symbols()) code = code * static_cast<std::uint64_t>(a) + x;
    if (code >= size) throw InvariantViolation("window code out of range");
    vertices.push_back(code);
  }
  return Walk::closed(std::move(vertices));
}

Walk induced_walk(const Digraph& g, const CyclicSequence& d, int k) {
  const KTour tour = k_tour(d, k);
  std::vector<VertexId> vertices;
  vertices.reserve(tour.windows.size());
  for (const KString& window : tour.windows) vertices.push_back(g.index_of(window));
  return Walk::closed(std::move(vertices));
}

Walk induced_walk(const CyclicSequence& d, int k) {
  return induced_walk(generated_subdigraph(d, k), d, k);
}

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

// Precomputed neighbourhood masks and distances shared by the optimum search,
// the witness search and the enumerator. Every closed walk is searched from
// its smallest vertex, so a search rooted at `start` only moves through
// vertices >= start.
class DominationSearch {
 public:
  DominationSearch(const Digraph& g, const Limits& limits) : g_(g), n_(g.vertex_count()) {
    if (n_ == 0) throw DomainError("graph has no vertices");
    const std::size_t cap = std::min(limits.max_vertices, Limits::kOracleHardMax);
    if (n_ > cap) {
      throw ResourceError("graph has " + std::to_string(n_) + " vertices, oracle cap is " +
                          std::to_string(cap) + " (WATCHMAN_MAX_VERTICES); about " +
                          std::to_string(n_) + "*2^" + std::to_string(n_) + " states");
    }
    full_ = (n_ == 64) ? ~Mask{0} : ((Mask{1} << n_) - 1);
    closed_nbhd_.resize(n_);
    for (VertexId v = 0; v < n_; ++v) {
      Mask m = Mask{1} << v;
      for (VertexId u : g.out_neighbors(v)) m |= Mask{1} << u;
      closed_nbhd_[v] = m;
    }
    max_out_ = g.max_out_degree();
    distance_to_.assign(n_, std::vector<std::size_t>(n_, kUnreachable));
    for (VertexId target = 0; target < n_; ++target) reverse_bfs(target);
  }

  std::size_t size() const { return n_; }

  // Minimum length over all starts; kUnreachable when infeasible.
  std::size_t optimum(std::uint64_t& explored) const {
    std::size_t best = kUnreachable;
    for (VertexId start = 0; start < n_ && best > 0; ++start) {
      best = std::min(best, optimum_from(start, best, explored));
    }
    return best;
  }

  std::optional<Walk> first_walk(std::size_t length) const {
    for (VertexId start = 0; start < n_; ++start) {
      if (length == 0) {
        if (closed_nbhd_[start] == full_) return Walk::stationary(start);
        continue;
      }
      Failures failures(length + 1);
      std::vector<VertexId> path{start};
      if (extend(start, start, closed_nbhd_[start], length, path, failures, nullptr)) {
        return Walk::closed(std::move(path));
      }
    }
    return std::nullopt;
  }

  std::vector<Walk> all_walks(std::size_t length) const {
    std::vector<Walk> out;
    for (VertexId start = 0; start < n_; ++start) {
      if (length == 0) {
        if (closed_nbhd_[start] == full_) out.push_back(Walk::stationary(start));
        continue;
      }
      Failures failures(length + 1);
      std::vector<VertexId> path{start};
      extend(start, start, closed_nbhd_[start], length, path, failures, &out);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  using Failures = std::vector<std::unordered_set<Mask>>;

  static Mask key(VertexId v, Mask mask) { return (mask << 6) | v; }

  void reverse_bfs(VertexId target) {
    std::deque<VertexId> queue{target};
    distance_to_[target][target] = 0;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (VertexId u : g_.in_neighbors(v)) {
        if (distance_to_[u][target] == kUnreachable) {
          distance_to_[u][target] = distance_to_[v][target] + 1;
          queue.push_back(u);
        }
      }
    }
  }

  // Fewest further arcs needed to dominate everything and return to `start`
  // from `v` having already dominated `mask`. Each intermediate vertex adds
  // at most max_out_ new vertices; the final arrival at `start` adds none.
  std::size_t lower_bound(VertexId start, VertexId v, Mask mask) const {
    const std::size_t back = distance_to_[v][start];
    if (back == kUnreachable) return kUnreachable;
    const auto missing = static_cast<std::size_t>(std::popcount(full_ & ~mask));
    if (missing == 0) return back;
    if (max_out_ == 0) return kUnreachable;
    return std::max(back, (missing + max_out_ - 1) / max_out_ + 1);
  }

  std::size_t optimum_from(VertexId start, std::size_t best, std::uint64_t& explored) const {
    const Mask initial = closed_nbhd_[start];
    ++explored;
    if (initial == full_) return 0;
    std::unordered_set<Mask> seen{key(start, initial)};
    std::vector<std::pair<VertexId, Mask>> level{{start, initial}};
    for (std::size_t depth = 0; !level.empty() && depth + 1 < best; ++depth) {
      std::vector<std::pair<VertexId, Mask>> next_level;
      for (auto [v, mask] : level) {
        ++explored;
        for (VertexId u : g_.out_neighbors(v)) {
          if (u < start) continue;
          const Mask next = mask | closed_nbhd_[u];
          if (u == start && next == full_) return depth + 1;
          const std::size_t bound = lower_bound(start, u, next);
          if (bound == kUnreachable || depth + 1 + bound >= best) continue;
          if (seen.insert(key(u, next)).second) next_level.emplace_back(u, next);
        }
      }
      level = std::move(next_level);
    }
    return kUnreachable;
  }

  // Depth-first extension of `path` by exactly `remaining` arcs, smallest
  // successor first. With `sink` null, stops at the first completion (the
  // lexicographically least); otherwise records every completion that is in
  // canonical rotation. Returns whether any completion exists below here.
  bool extend(VertexId start, VertexId v, Mask mask, std::size_t remaining,
              std::vector<VertexId>& path, Failures& failures, std::vector<Walk>* sink) const {
    if (failures[remaining].count(key(v, mask))) return false;
    bool found = false;
    for (VertexId u : g_.out_neighbors(v)) {
      if (u < start) continue;
      const Mask next = mask | closed_nbhd_[u];
      if (remaining == 1) {
        if (u == start && next == full_) {
          found = true;
          if (sink == nullptr) return true;
          if (least_rotation_offset(std::span<const VertexId>(path)) == 0) {
            sink->push_back(Walk::closed(path));
          }
        }
        continue;
      }
      const std::size_t bound = lower_bound(start, u, next);
      if (bound == kUnreachable || bound > remaining - 1) continue;
      path.push_back(u);
      const bool below = extend(start, u, next, remaining - 1, path, failures, sink);
      if (below && sink == nullptr) return true;
      found = found || below;
      path.pop_back();
    }
    if (!found) failures[remaining].insert(key(v, mask));
    return found;
  }

  const Digraph& g_;
  std::size_t n_;
  Mask full_ = 0;
  std::size_t max_out_ = 0;
  std::vector<Mask> closed_nbhd_;
  // distance_to_[u][v]: fewest arcs from u to v.
  std::vector<std::vector<std::size_t>> distance_to_;
};

}  // namespace

std::optional<SolveResult> solve_min_walk(const Digraph& g, const Limits& limits) {
  const DominationSearch search(g, limits);
  std::uint64_t explored = 0;
  const std::size_t best = search.optimum(explored);
  if (best == kUnreachable) return std::nullopt;
  auto witness = search.first_walk(best);
  if (!witness) throw InvariantViolation("optimum found but no witness of that length");
  return SolveResult{best, std::move(*witness), explored};
}

std::vector<Walk> enumerate_min_walks(const Digraph& g, std::size_t length,
                                      const Limits& limits) {
  const DominationSearch search(g, limits);
  return search.all_walks(length);
}

}  // namespace dbwalk
