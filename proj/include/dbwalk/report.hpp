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

#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "dbwalk/analysis.hpp"
#include "dbwalk/digraph.hpp"
#include "dbwalk/watchman.hpp"

namespace dbwalk {

// {"optimum": L, "witness": ["100", ...], "explored_states": n}
nlohmann::json solve_result_to_json(const Digraph& g, const SolveResult& result);

// Rotation-deduplicated minimum walks as label lists.
nlohmann::json walks_to_json(const Digraph& g, const std::vector<Walk>& walks);

nlohmann::json record_to_json(const VerificationRecord& record);
nlohmann::json summary_to_json(const SweepSummary& summary);

// One JSON object per entry, then {"summary": {...}}.
void write_sweep_jsonl(std::ostream& out, const SweepReport& report);

// Header: sequence,length,verdict,reason,induced_length,oracle_optimum,is_watchman.
// Skipped entries are omitted.
void write_sweep_csv(std::ostream& out, const SweepReport& report);

}  // namespace dbwalk
