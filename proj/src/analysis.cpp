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

#include "dbwalk/analysis.hpp"

#include <algorithm>
#include <set>
#include <span>

#include "dbwalk/digraph.hpp"
#include "dbwalk/errors.hpp"
#include "dbwalk/generators.hpp"
#include "dbwalk/watchman.hpp"

namespace dbwalk {

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::ProvablyNotWatchman:
      return "ProvablyNotWatchman";
    case Verdict::ProvablyWatchman:
      return "ProvablyWatchman";
    case Verdict::Undetermined:
      return "Undetermined";
  }
  return "Undetermined";
}

std::string to_string(Reason reason) {
  switch (reason) {
    case Reason::ConstantRun:
      return "ConstantRun";
    case Reason::DoubledSequence:
      return "DoubledSequence";
    case Reason::DistinctWindows:
      return "DistinctWindows";
    case Reason::None:
      return "None";
  }
  return "None";
}

namespace {

void require_order(const CyclicSequence& d, int k) {
  if (k < 1) throw DomainError("order must be >= 1, got " + std::to_string(k));
  if (d.length() < static_cast<std::size_t>(k)) {
    throw DomainError("sequence shorter than order (length " + std::to_string(d.length()) +
                      ", order " + std::to_string(k) + ")");
  }
}

bool window_is_constant(const CyclicSequence& d, std::size_t start, int k) {
  for (int j = 1; j < k; ++j) {
    if (d.at(start + static_cast<std::size_t>(j)) != d.at(start)) return false;
  }
  return true;
}

}  // namespace

bool has_constant_run(const CyclicSequence& d, int k) {
  require_order(d, k);
  for (std::size_t i = 0; i < d.length(); ++i) {
    if (window_is_constant(d, i, k)) return true;
  }
  return false;
}

bool has_seam_only_constant_run(const CyclicSequence& d, int k) {
  require_order(d, k);
  const std::size_t n = d.length();
  const std::size_t linear_starts = n - static_cast<std::size_t>(k) + 1;
  bool seam = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!window_is_constant(d, i, k)) continue;
    if (i < linear_starts) return false;
    seam = true;
  }
  return seam;
}

bool constant_run_depends_on_seam(const CyclicSequence& d, int k) {
  require_order(d, k);
  for (std::size_t r = 0; r < d.length(); ++r) {
    if (has_seam_only_constant_run(d.rotated(r), k)) return true;
  }
  return false;
}

bool is_doubled(const CyclicSequence& d, int k) {
  const std::size_t n = d.length();
  if (n % 2 != 0) return false;
  const std::size_t half = n / 2;
  if (k < 0 || half < static_cast<std::size_t>(k)) return false;
  auto s = d.symbols();
  return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(half),
                    s.begin() + static_cast<std::ptrdiff_t>(half));
}

bool has_distinct_windows(const CyclicSequence& d, int k) {
  require_order(d, k);
  const std::size_t n = d.length();
  const auto width = static_cast<std::size_t>(k - 1);
  std::set<std::vector<Symbol>> seen;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Symbol> window;
    window.reserve(width);
    for (std::size_t j = 0; j < width; ++j) window.push_back(d.at(i + j));
    if (!seen.insert(std::move(window)).second) return false;
  }
  return true;
}

Classification classify(const CyclicSequence& d, int k) {
  require_order(d, k);
  if (has_constant_run(d, k)) return {Verdict::ProvablyNotWatchman, Reason::ConstantRun};
  if (is_doubled(d, k)) return {Verdict::ProvablyNotWatchman, Reason::DoubledSequence};
  if (has_distinct_windows(d, k)) return {Verdict::ProvablyWatchman, Reason::DistinctWindows};
  return {Verdict::Undetermined, Reason::None};
}

VerificationRecord verify(const CyclicSequence& d, int k, const Limits& limits) {
  require_order(d, k);
  const Classification classification = classify(d, k);
  const Digraph g = generated_subdigraph(d, k);
  const Walk walk = induced_walk(g, d, k);
  const auto solved = solve_min_walk(g, limits);
  if (!solved) {
    throw InvariantViolation("generated subdigraph of " + d.str() +
                             " has no closed dominating walk");
  }
  if (!is_closed_dominating_walk(g, walk)) {
    throw InvariantViolation("induced walk of " + d.str() + " is not closed dominating");
  }

  const std::vector<Walk> minimum = enumerate_min_walks(g, solved->optimum_length, limits);
  const bool member =
      std::binary_search(minimum.begin(), minimum.end(), canonical_rotation(walk));
  const bool length_matches = walk.length() == solved->optimum_length;
  if (member != length_matches) {
    throw InvariantViolation("induced walk of " + d.str() +
                             ": optimal length and minimum-set membership disagree");
  }

  VerificationRecord record{d,
                            k,
                            classification,
                            walk.length(),
                            solved->optimum_length,
                            member,
                            g.vertex_count(),
                            minimum.size(),
                            constant_run_depends_on_seam(d, k)};

  if (record.is_watchman && record.induced_length != record.oracle_optimum) {
    throw InvariantViolation("watchman record with mismatched lengths for " + d.str());
  }
  if (classification.verdict == Verdict::ProvablyWatchman &&
      !(record.is_watchman && record.induced_length == d.length())) {
    throw InvariantViolation("distinct-window sequence " + d.str() +
                             " does not induce a watchman's walk");
  }
  if (classification.verdict == Verdict::ProvablyNotWatchman && record.is_watchman) {
    throw InvariantViolation("sequence " + d.str() + " flagged " +
                             to_string(classification.reason) +
                             " induces a watchman's walk");
  }
  return record;
}

SweepReport sweep(int a, int k, std::size_t min_length, std::size_t max_length,
                  const SweepOptions& options) {
  Alphabet alphabet(a);
  if (k < 1) throw DomainError("order must be >= 1, got " + std::to_string(k));
  if (min_length < static_cast<std::size_t>(k)) {
    throw DomainError("sweep lengths must be >= order " + std::to_string(k));
  }
  if (min_length > max_length) throw DomainError("empty sweep length range");

  SweepReport report;
  auto& summary = report.summary;
  for (std::size_t n = min_length; n <= max_length && !summary.truncated; ++n) {
    for_each_necklace(a, n, [&](std::span<const Symbol> word) {
      if (summary.truncated) return;
      CyclicSequence d(alphabet, std::vector<Symbol>(word.begin(), word.end()));
      if (options.filter && !options.filter(d)) return;
      if (summary.verified + summary.skipped >= options.budget) {
        summary.truncated = true;
        return;
      }
      SweepEntry entry{d, std::nullopt, {}};
      try {
        entry.record = verify(d, k, options.limits);
      } catch (const ResourceError& e) {
        entry.skip_reason = e.what();
      }
      if (entry.record) {
        ++summary.verified;
        ++summary.cells[{entry.record->classification.verdict, entry.record->is_watchman}];
        if (entry.record->seam_dependent_run) {
          ++summary.seam_dependent_runs;
          if (!entry.record->is_watchman) ++summary.seam_dependent_runs_not_watchman;
        }
      } else {
        ++summary.skipped;
      }
      report.entries.push_back(std::move(entry));
    });
  }
  return report;
}

}  // namespace dbwalk
