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

#include "dbwalk/graph_io.hpp"

#include <string>
#include <vector>

#include "dbwalk/errors.hpp"

namespace dbwalk {

using nlohmann::json;

json graph_to_json(const Digraph& g) {
  json vertices = json::array();
  for (const auto& label : g.labels()) vertices.push_back(label.str());
  json arcs = json::array();
  for (const Arc& arc : g.arcs()) arcs.push_back({arc.from, arc.to});
  json provenance = {{"kind", to_string(g.provenance().kind)}};
  if (g.provenance().source) provenance["sequence"] = g.provenance().source->str();
  return {{"alphabet", g.alphabet().size()},
          {"order", g.order()},
          {"vertices", std::move(vertices)},
          {"arcs", std::move(arcs)},
          {"provenance", std::move(provenance)}};
}

Digraph graph_from_json(const json& doc) {
  try {
    const int a = doc.at("alphabet").get<int>();
    const int k = doc.at("order").get<int>();
    Alphabet alphabet(a);

    std::vector<KString> labels;
    for (const auto& v : doc.at("vertices")) {
      labels.push_back(KString::parse(v.get<std::string>(), alphabet));
    }
    std::vector<Arc> arcs;
    for (const auto& pair : doc.at("arcs")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw DomainError("graph JSON: each arc must be an [i, j] pair");
      }
      arcs.push_back({pair[0].get<VertexId>(), pair[1].get<VertexId>()});
    }

    Provenance provenance;
    if (doc.contains("provenance")) {
      const auto& p = doc.at("provenance");
      const auto kind = p.at("kind").get<std::string>();
      if (kind == "de_bruijn") {
        provenance.kind = Provenance::Kind::DeBruijn;
      } else if (kind == "generated") {
        provenance.kind = Provenance::Kind::Generated;
        provenance.source = parse_sequence(p.at("sequence").get<std::string>(), a);
      } else if (kind == "custom") {
        provenance.kind = Provenance::Kind::Custom;
      } else {
        throw DomainError("graph JSON: unknown provenance kind '" + kind + "'");
      }
    }
    return Digraph(alphabet, k, std::move(labels), std::move(arcs), std::move(provenance));
  } catch (const json::exception& e) {
    throw DomainError(std::string("graph JSON: ") + e.what());
  }
}

Digraph parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("graph JSON: ") + e.what());
  }
  return graph_from_json(doc);
}

}  // namespace dbwalk
