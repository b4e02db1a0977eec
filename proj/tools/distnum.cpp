// Copyright 2026 The distnum Authors
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

// Command-line front end: reproduces the exceptional table, sweeps the
// closed-form grid and answers one-off questions about groups and graphs.
//
// Exit status: 0 when every check passes, 1 on a mismatch, 2 on bad input or
// an exceeded cap/budget.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "distnum/classify.hpp"
#include "distnum/constructions.hpp"
#include "distnum/errors.hpp"
#include "distnum/graph.hpp"
#include "distnum/group_io.hpp"
#include "distnum/harness.hpp"
#include "json.hpp"

namespace {

using namespace distnum;

struct Common {
  std::size_t max_degree = SolverOptions{}.max_degree;
  std::optional<long long> budget_ms;
  bool json = false;
  bool strict_witness = false;
  unsigned jobs = 1;
  unsigned threads = 1;

  HarnessOptions harness() const {
    HarnessOptions h;
    h.solver.max_degree = max_degree;
    if (budget_ms) h.solver.budget = std::chrono::milliseconds(*budget_ms);
    h.solver.threads = threads;
    h.solver.strict_witness = strict_witness || threads <= 1;
    h.jobs = jobs;
    return h;
  }
  // Wall times vary between runs; strict mode keeps reports byte-identical.
  bool timing() const { return !strict_witness; }
};

int emit(const VerificationReport& report, const Common& common) {
  std::cout << (common.json ? format_jsonl(report, common.timing())
                            : format_text(report, common.timing()));
  return report.all_match() ? 0 : 1;
}

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string piece = text.substr(pos, comma - pos);
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (piece.empty() || used != piece.size()) throw InputError("bad number '" + piece + "'");
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Graph build_graph(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const auto args = colon == std::string::npos ? std::vector<std::size_t>{}
                                               : parse_list(spec.substr(colon + 1));
  if (name == "petersen" && args.empty()) return petersen();
  if (name == "complete" && args.size() == 1) return complete_graph(args[0]);
  if (name == "path" && args.size() == 1) return path_graph(args[0]);
  if (name == "cycle" && args.size() == 1) return cycle_graph(args[0]);
  if (name == "clique-family" && args.size() == 2) return clique_family(args[0], args[1]);
  std::ifstream in(spec);
  if (!in) throw InputError("'" + spec + "' is neither a graph builder nor a readable file");
  try {
    return read_graph(in);
  } catch (const InputError& e) {
    throw InputError(spec + ": " + e.what());
  }
}

std::string points_text(const PointSet& points) {
  std::string out = "{";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(points[i] + 1);
  }
  return out + "}";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact distinguishing numbers of permutation groups and graphs"};
  app.require_subcommand(1);
  Common common;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--max-degree", common.max_degree, "Largest degree the solver accepts");
    sub->add_option("--budget-ms", common.budget_ms, "Wall-clock budget per solve")
        ->envname("DISTNUM_BUDGET_MS");
    sub->add_flag("--json", common.json, "One JSON record per line");
    sub->add_flag("--strict-witness", common.strict_witness,
                  "Canonical witnesses and no timing fields, for reproducible output");
    sub->add_option("--threads", common.threads, "Solver threads per case")
        ->check(CLI::Range(1, 256));
  };

  std::size_t t_max = 1, s_max = 1;
  auto* table1 = app.add_subcommand("table1", "Reproduce the exceptional groups table");
  table1->add_option("--t-max", t_max, "Largest number of fixed points")->check(CLI::Range(0, 2));
  table1->add_option("--s-max", s_max, "Largest number of 2-orbits")->check(CLI::Range(0, 2));
  table1->add_option("--jobs", common.jobs, "Cases solved concurrently");
  add_common(table1);

  GridSpec grid_spec;
  auto* grid = app.add_subcommand("grid", "Check the closed form over a grid of orbit profiles");
  grid->add_option("--n-min", grid_spec.n_min)->check(CLI::Range(3, 8));
  grid->add_option("--n-max", grid_spec.n_max)->check(CLI::Range(3, 8));
  grid->add_option("--k-min", grid_spec.k_min);
  grid->add_option("--k-max", grid_spec.k_max);
  grid->add_option("--r-max", grid_spec.r_max);
  grid->add_option("--s-max", grid_spec.s_max);
  grid->add_option("--t-max", grid_spec.t_max);
  grid->add_option("--degree-max", grid_spec.max_degree, "Skip profiles of larger degree");
  grid->add_option("--jobs", common.jobs, "Cases solved concurrently");
  add_common(grid);

  std::string group_spec;
  std::size_t fixed = 0;
  auto* compute = app.add_subcommand("compute", "Solve one group");
  compute->add_option("group", group_spec, "Builder name or group file")->required();
  compute->add_option("--fixed", fixed, "Append fixed points");
  add_common(compute);

  auto* classify_cmd = app.add_subcommand("classify", "Place a group in the classification");
  classify_cmd->add_option("group", group_spec, "Builder name or group file")->required();
  classify_cmd->add_option("--fixed", fixed, "Append fixed points");
  add_common(classify_cmd);

  auto* regular = app.add_subcommand("regular-set", "Search for a regular set");
  regular->add_option("group", group_spec, "Builder name or group file")->required();
  regular->add_option("--fixed", fixed, "Append fixed points");
  add_common(regular);

  auto* export_cmd = app.add_subcommand("export", "Print a group in the text format");
  export_cmd->add_option("group", group_spec, "Builder name or group file")->required();
  export_cmd->add_option("--fixed", fixed, "Append fixed points");

  std::string graph_spec;
  std::string joined_text;
  auto* graph_d = app.add_subcommand("graph-d", "Distinguishing number of a graph");
  graph_d->add_option("graph", graph_spec,
                      "petersen, complete:N, path:N, cycle:N, clique-family:N,K or a file")
      ->required();
  bool use_complement = false;
  graph_d->add_flag("--complement", use_complement, "Use the complement graph");
  graph_d->add_option("--joined", joined_text,
                      "Add fixed vertices, e.g. 1,0 = one universal, one isolated");
  add_common(graph_d);

  auto* complement_cmd = app.add_subcommand("complement", "Print the complement of a graph");
  complement_cmd->add_option("graph", graph_spec, "Graph builder or file")->required();

  auto* extend = app.add_subcommand("extend", "Add fixed vertices to a graph");
  extend->add_option("graph", graph_spec, "Graph builder or file")->required();
  extend->add_option("--joined", joined_text, "Per new vertex: 1 = universal, 0 = isolated")
      ->required();

  CLI11_PARSE(app, argc, argv);

  auto joined_flags = [&] {
    std::vector<bool> joined;
    if (joined_text.empty()) return joined;
    for (std::size_t v : parse_list(joined_text)) {
      if (v > 1) throw InputError("--joined takes 0/1 flags");
      joined.push_back(v == 1);
    }
    return joined;
  };

  try {
    const HarnessOptions options = common.harness();
    if (*table1) return emit(run_table1(t_max, s_max, options), common);
    if (*grid) return emit(run_formula_grid(grid_spec, options), common);
    if (*compute) {
      const BuiltGroup built = build_group(group_spec, fixed);
      VerificationReport report{"compute", {}};
      report.records.push_back(
          compute_record(group_spec, built.description, built.group, built.expected, options));
      return emit(report, common);
    }
    if (*classify_cmd) {
      const BuiltGroup built = build_group(group_spec, fixed);
      ClassifyOptions copts;
      copts.solver = options.solver;
      const Classification c = classify(built.group, copts);
      std::cout << (common.json ? format_json(c) + "\n" : format_text(c));
      return c.consistent() ? 0 : 1;
    }
    if (*regular) {
      const BuiltGroup built = build_group(group_spec, fixed);
      RegularSetOptions ropts;
      ropts.max_degree = std::max(ropts.max_degree, common.max_degree);
      ropts.budget = options.solver.budget;
      const auto set = regular_set(built.group, ropts);
      if (common.json) {
        nlohmann::ordered_json j{{"group", built.description}, {"degree", built.group.degree()}};
        if (set) {
          std::vector<std::size_t> pts;
          for (Point p : *set) pts.push_back(static_cast<std::size_t>(p) + 1);
          j["regular_set"] = pts;
        } else {
          j["regular_set"] = nullptr;
        }
        std::cout << j.dump() << "\n";
      } else {
        std::cout << (set ? "regular set: " + points_text(*set) : "no regular set") << "\n";
      }
      return 0;
    }
    if (*export_cmd) {
      std::cout << format_group(build_group(group_spec, fixed).group);
      return 0;
    }
    if (*complement_cmd) {
      std::cout << format_graph(complement(build_graph(graph_spec)));
      return 0;
    }
    if (*extend) {
      std::cout << format_graph(extend_with_fixed_points(build_graph(graph_spec), joined_flags()));
      return 0;
    }
    if (*graph_d) {
      Graph g = build_graph(graph_spec);
      if (use_complement) g = complement(g);
      const auto joined = joined_flags();
      if (!joined.empty()) g = extend_with_fixed_points(g, joined);
      const PermGroup aut = automorphism_group(g);
      VerificationReport report{"graph-d", {}};
      std::string id = graph_spec;
      if (use_complement) id += " (complement)";
      if (!joined.empty()) id += " + " + joined_text;
      report.records.push_back(
          compute_record(id, "Aut(" + id + ")", aut, std::nullopt, options));
      return emit(report, common);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
