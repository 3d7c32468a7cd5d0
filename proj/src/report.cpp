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

#include "dbwalk/report.hpp"

#include <ostream>

namespace dbwalk {

using nlohmann::json;

json solve_result_to_json(const Digraph& g, const SolveResult& result) {
  json witness = json::array();
  for (VertexId v : result.witness.vertices()) witness.push_back(g.label(v).str());
  return {{"optimum", result.optimum_length},
          {"witness", std::move(witness)},
          {"explored_states", result.explored_states}};
}

json walks_to_json(const Digraph& g, const std::vector<Walk>& walks) {
  json out = json::array();
  for (const Walk& walk : walks) {
    json labels = json::array();
    for (VertexId v : walk.vertices()) labels.push_back(g.label(v).str());
    out.push_back(std::move(labels));
  }
  return out;
}

json record_to_json(const VerificationRecord& record) {
  return {{"sequence", record.sequence.str()},
          {"alphabet", record.sequence.alphabet().size()},
          {"order", record.order},
          {"length", record.sequence.length()},
          {"verdict", to_string(record.classification.verdict)},
          {"reason", to_string(record.classification.reason)},
          {"induced_length", record.induced_length},
          {"oracle_optimum", record.oracle_optimum},
          {"is_watchman", record.is_watchman},
          {"vertices", record.vertex_count},
          {"min_walk_count", record.min_walk_count},
          {"seam_dependent_run", record.seam_dependent_run}};
}

json summary_to_json(const SweepSummary& summary) {
  json cells = json::array();
  for (const auto& [cell, count] : summary.cells) {
    cells.push_back({{"verdict", to_string(cell.first)},
                     {"is_watchman", cell.second},
                     {"count", count}});
  }
  return {{"verified", summary.verified},
          {"skipped", summary.skipped},
          {"truncated", summary.truncated},
          {"cells", std::move(cells)},
          {"seam_dependent_runs", summary.seam_dependent_runs},
          {"seam_dependent_runs_not_watchman", summary.seam_dependent_runs_not_watchman}};
}

void write_sweep_jsonl(std::ostream& out, const SweepReport& report) {
  for (const SweepEntry& entry : report.entries) {
    if (entry.record) {
      out << record_to_json(*entry.record).dump() << '\n';
    } else {
      json skip = {{"sequence", entry.sequence.str()},
                   {"length", entry.sequence.length()},
                   {"skipped", entry.skip_reason}};
      out << skip.dump() << '\n';
    }
  }
  out << json{{"summary", summary_to_json(report.summary)}}.dump() << '\n';
}

void write_sweep_csv(std::ostream& out, const SweepReport& report) {
  out << "sequence,length,verdict,reason,induced_length,oracle_optimum,is_watchman\n";
  for (const SweepEntry& entry : report.entries) {
    if (!entry.record) continue;
    const auto& r = *entry.record;
    out << r.sequence.str() << ',' << r.sequence.length() << ','
        << to_string(r.classification.verdict) << ',' << to_string(r.classification.reason)
        << ',' << r.induced_length << ',' << r.oracle_optimum << ','
        << (r.is_watchman ? "true" : "false") << '\n';
  }
}

}  // namespace dbwalk
