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

#include <string_view>

#include <json.hpp>

#include "dbwalk/digraph.hpp"

namespace dbwalk {

// {"alphabet": a, "order": k, "vertices": [...], "arcs": [[i,j],...],
//  "provenance": {"kind": "de_bruijn" | "generated" | "custom",
//                 "sequence": "..." (generated only)}}
nlohmann::json graph_to_json(const Digraph& g);

// Inverse of graph_to_json. Vertices may come in any order; arcs index the
// list as given. Throws DomainError on malformed documents.
Digraph graph_from_json(const nlohmann::json& doc);
Digraph parse_graph_json(std::string_view text);

}  // namespace dbwalk
