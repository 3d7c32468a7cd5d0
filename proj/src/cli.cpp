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

#include "dbwalk/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dbwalk/analysis.hpp"
#include "dbwalk/digraph.hpp"
#include "dbwalk/errors.hpp"
#include "dbwalk/generators.hpp"
#include "dbwalk/graph_io.hpp"
#include "dbwalk/report.hpp"
#include "dbwalk/watchman.hpp"

namespace dbwalk::cli {
namespace {

struct Options {
  int alphabet = 2;
  int order = 0;
  std::string algo = "fkm";
  std::string seq;
  std::string from_seq;
  bool dot = false;
  bool json = false;
  bool highlight_induced = false;
  bool count = false;
  std::string lengths;
  std::uint64_t budget = 100000;
  std::string csv_path;
};

void add_alphabet(CLI::App* cmd, Options& o) {
  cmd->add_option("-a,--alphabet", o.alphabet, "Alphabet size")
      ->check(CLI::Range(Alphabet::kMinSize, Alphabet::kMaxSize))
      ->capture_default_str();
}

CLI::Option* add_order(CLI::App* cmd, Options& o) {
  return cmd->add_option("-k,--order", o.order, "Order (string length)")
      ->check(CLI::PositiveNumber);
}

std::pair<std::size_t, std::size_t> parse_lengths(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw DomainError("--lengths must look like LO..HI");
  auto parse = [&](std::string_view part) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw DomainError("--lengths must look like LO..HI");
    }
    return value;
  };
  const std::string_view view(text);
  return {parse(view.substr(0, dots)), parse(view.substr(dots + 2))};
}

int run_gen(const Options& o, const Limits& limits, std::ostream& out) {
  CyclicSequence s = o.algo == "fkm"      ? gen_fkm(o.alphabet, o.order, limits)
                     : o.algo == "greedy" ? gen_greedy(o.alphabet, o.order, limits)
                                          : gen_eulerian(o.alphabet, o.order, limits);
  out << s.str() << '\n';
  return 0;
}

int run_graph(const Options& o, const Limits& limits, std::ostream& out) {
  if (o.highlight_induced && (o.from_seq.empty() || !o.dot)) {
    throw DomainError("--highlight-induced needs --from-seq and --dot");
  }
  std::optional<CyclicSequence> d;
  if (!o.from_seq.empty()) d = parse_sequence(o.from_seq, o.alphabet);
  const Digraph g = d ? generated_subdigraph(*d, o.order)
                      : build_de_bruijn_graph(o.alphabet, o.order, limits);
  if (o.dot) {
    std::optional<Walk> highlight;
    if (o.highlight_induced) highlight = induced_walk(g, *d, o.order);
    out << to_dot(g, highlight);
  } else {
    out << graph_to_json(g).dump() << '\n';
  }
  return 0;
}

int run_walk(const Options& o, const Limits& limits, std::ostream& out) {
  std::optional<CyclicSequence> seed;
  if (!o.seq.empty()) seed = parse_sequence(o.seq, o.alphabet);
  const Walk walk = theorem_walk(o.alphabet, o.order, seed, limits);
  const Digraph g = build_de_bruijn_graph(o.alphabet, o.order, limits);
  out << walk_labels(g, walk) << '\n';
  return 0;
}

int run_solve(const Options& o, const Limits& limits, std::istream& in, std::ostream& out,
              std::ostream& err) {
  std::optional<Digraph> g;
  if (!o.from_seq.empty()) {
    if (o.order < 1) throw DomainError("--from-seq needs -k");
    g = generated_subdigraph(parse_sequence(o.from_seq, o.alphabet), o.order);
  } else if (o.order >= 1) {
    g = build_de_bruijn_graph(o.alphabet, o.order, limits);
  } else {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    g = parse_graph_json(text);
  }
  const auto result = solve_min_walk(*g, limits);
  if (!result) {
    out << nlohmann::json{{"optimum", nullptr}, {"witness", nlohmann::json::array()}}.dump()
        << '\n';
    err << "error: graph has no closed dominating walk\n";
    return 1;
  }
  auto doc = solve_result_to_json(*g, *result);
  if (o.count) {
    const auto walks = enumerate_min_walks(*g, result->optimum_length, limits);
    doc["count"] = walks.size();
    doc["walks"] = walks_to_json(*g, walks);
  }
  out << doc.dump() << '\n';
  return 0;
}

int run_classify(const Options& o, std::ostream& out) {
  const auto c = classify(parse_sequence(o.seq, o.alphabet), o.order);
  out << to_string(c.verdict) << " (" << to_string(c.reason) << ")\n";
  return 0;
}

int run_verify(const Options& o, const Limits& limits, std::ostream& out) {
  const auto record = verify(parse_sequence(o.seq, o.alphabet), o.order, limits);
  out << record_to_json(record).dump() << '\n';
  return 0;
}

int run_sweep(const Options& o, const Limits& limits, std::ostream& out) {
  const auto [lo, hi] = parse_lengths(o.lengths);
  SweepOptions options;
  options.budget = o.budget;
  options.limits = limits;
  const SweepReport report = sweep(o.alphabet, o.order, lo, hi, options);
  write_sweep_jsonl(out, report);
  if (!o.csv_path.empty()) {
    std::ofstream csv(o.csv_path);
    if (!csv) throw DomainError("cannot open " + o.csv_path + " for writing");
    write_sweep_csv(csv, report);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"de Bruijn sequences, graphs and watchman's walks", "dbwalk"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate a de Bruijn sequence");
  add_alphabet(gen, o);
  add_order(gen, o)->required();
  gen->add_option("--algo", o.algo, "Generator")
      ->check(CLI::IsMember({"fkm", "greedy", "euler"}))
      ->capture_default_str();

  auto* graph = app.add_subcommand("graph", "Emit G(a,k) or a generated subdigraph");
  add_alphabet(graph, o);
  add_order(graph, o)->required();
  graph->add_option("--from-seq", o.from_seq, "Generating sequence");
  auto* dot = graph->add_flag("--dot", o.dot, "Graphviz output");
  auto* json = graph->add_flag("--json", o.json, "JSON output (default)");
  dot->excludes(json);
  graph->add_flag("--highlight-induced", o.highlight_induced,
                  "Bold the walk induced by --from-seq");

  auto* walk = app.add_subcommand("walk", "Watchman's walk of G(a,k) from a de Bruijn sequence");
  add_alphabet(walk, o);
  add_order(walk, o)->required();
  walk->add_option("--seq", o.seq, "Order k-1 de Bruijn sequence (default: FKM)");

  auto* solve = app.add_subcommand(
      "solve", "Exact minimum closed dominating walk (graph JSON on stdin without -k)");
  add_alphabet(solve, o);
  add_order(solve, o);
  solve->add_option("--from-seq", o.from_seq, "Generating sequence");
  solve->add_flag("--count", o.count, "List all minimum walks up to rotation");

  auto* classify_cmd = app.add_subcommand("classify", "Certificate verdict for a sequence");
  add_alphabet(classify_cmd, o);
  add_order(classify_cmd, o)->required();
  classify_cmd->add_option("--seq", o.seq, "Generating sequence")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Verdict checked against the oracle");
  add_alphabet(verify_cmd, o);
  add_order(verify_cmd, o)->required();
  verify_cmd->add_option("--seq", o.seq, "Generating sequence")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "Verify every rotation class in a length range");
  add_alphabet(sweep_cmd, o);
  add_order(sweep_cmd, o)->required();
  sweep_cmd->add_option("--lengths", o.lengths, "LO..HI")->required();
  sweep_cmd->add_option("--budget", o.budget, "Maximum sequences verified")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep_cmd->add_option("--csv", o.csv_path, "Also write a CSV summary here");

  std::vector<std::string> argv_store{"dbwalk"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    const Limits limits = Limits::from_environment();
    if (gen->parsed()) return run_gen(o, limits, out);
    if (graph->parsed()) return run_graph(o, limits, out);
    if (walk->parsed()) return run_walk(o, limits, out);
    if (solve->parsed()) return run_solve(o, limits, in, out, err);
    if (classify_cmd->parsed()) return run_classify(o, out);
    if (verify_cmd->parsed()) return run_verify(o, limits, out);
    if (sweep_cmd->parsed()) return run_sweep(o, limits, out);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace dbwalk::cli
