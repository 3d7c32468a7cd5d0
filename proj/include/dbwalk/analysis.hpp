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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dbwalk/limits.hpp"
#include "dbwalk/sequence.hpp"

namespace dbwalk {

enum class Verdict { ProvablyNotWatchman, ProvablyWatchman, Undetermined };

// Which certificate decided the verdict.
enum class Reason { ConstantRun, DoubledSequence, DistinctWindows, None };

std::string to_string(Verdict verdict);
std::string to_string(Reason reason);

struct Classification {
  Verdict verdict;
  Reason reason;

  friend bool operator==(const Classification&, const Classification&) = default;
};

// Some cyclic length-k window of `d` is constant. Requires |d| >= k.
bool has_constant_run(const CyclicSequence& d, int k);

// A constant k-window exists only across the seam (position n-1 -> 0), not
// in the linear reading of `d`. Requires |d| >= k.
bool has_seam_only_constant_run(const CyclicSequence& d, int k);

// Some rotation of `d` has a constant k-window only across its seam, so a
// linear reading of that rotation would miss the run. Requires |d| >= k.
bool constant_run_depends_on_seam(const CyclicSequence& d, int k);

// |d| even, |d|/2 >= k, and both halves equal.
bool is_doubled(const CyclicSequence& d, int k);

// All |d| cyclic windows of length k-1 are pairwise distinct. Requires
// |d| >= k.
bool has_distinct_windows(const CyclicSequence& d, int k);

// ConstantRun, then DoubledSequence, then DistinctWindows, else Undetermined.
Classification classify(const CyclicSequence& d, int k);

struct VerificationRecord {
  CyclicSequence sequence;
  int order;
  Classification classification;
  std::size_t induced_length;
  std::size_t oracle_optimum;
  // The induced walk is a minimum closed dominating walk of the generated
  // subdigraph.
  bool is_watchman;
  std::size_t vertex_count;
  // Minimum walks up to rotation.
  std::size_t min_walk_count;
  // constant_run_depends_on_seam(sequence, order).
  bool seam_dependent_run;
};

// Builds the generated subdigraph, runs the exact oracle and checks the
// induced walk against the enumerated minimum set. Throws ResourceError when
// the subdigraph exceeds the oracle cap, InvariantViolation when a
// certificate disagrees with the oracle.
VerificationRecord verify(const CyclicSequence& d, int k, const Limits& limits = {});

struct SweepOptions {
  // Maximum number of sequences verified before the sweep stops.
  std::uint64_t budget = 100000;
  // Restricts the sweep to rotation-class representatives accepted here.
  std::function<bool(const CyclicSequence&)> filter;
  Limits limits;
};

struct SweepEntry {
  CyclicSequence sequence;
  std::optional<VerificationRecord> record;
  // Why `record` is missing (oracle cap exceeded).
  std::string skip_reason;
};

struct SweepSummary {
  std::uint64_t verified = 0;
  std::uint64_t skipped = 0;
  bool truncated = false;
  // (verdict, is_watchman) -> count.
  std::map<std::pair<Verdict, bool>, std::uint64_t> cells;
  std::uint64_t seam_dependent_runs = 0;
  std::uint64_t seam_dependent_runs_not_watchman = 0;
};

struct SweepReport {
  std::vector<SweepEntry> entries;
  SweepSummary summary;
};

// Verifies one representative (the necklace) of every rotation class of
// length n in [min_length, max_length], ordered by length then sequence.
SweepReport sweep(int a, int k, std::size_t min_length, std::size_t max_length,
                  const SweepOptions& options = {});

}  // namespace dbwalk
