// Copyright 2026 The sdgen Authors. All Rights Reserved.
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

#include "cli.h"

#include <CLI11.hpp>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "sdgen/edge_list.h"
#include "sdgen/errors.h"
#include "sdgen/generators.h"
#include "sdgen/metrics.h"
#include "sdgen/report.h"
#include "sdgen/serialize.h"
#include "sdgen/tuning.h"

namespace sdgen::cli {
namespace {

// Writes `text` to `path`, or to `out` when no path was given.
void emit(const std::string& path, const std::string& text,
          std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ValidationError("cannot write " + path);
  file << text;
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void report_warnings(const Warnings& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << '\n';
}

// "name=v1,v2,..." -> (name, values)
std::pair<std::string, std::vector<double>> parse_axis(const std::string& s) {
  const auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw std::invalid_argument("--axis expects NAME=v1,v2,..., got '" + s +
                                "'");
  }
  std::vector<double> values;
  std::stringstream rest(s.substr(eq + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw std::invalid_argument("--axis: bad number '" + item + "'");
    }
    values.push_back(v);
  }
  return {s.substr(0, eq), values};
}

struct GenerateArgs {
  NodeId nodes = 0;
  std::uint64_t edges = 0;
  std::optional<double> e1, e2;
  std::uint64_t seed = 0;
  std::string output, stats;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  SdgParams params = a.edges > 0 ? sdg_default_params(a.nodes, a.edges)
                                 : SdgParams{0.45, 1.0};
  if (a.e1) params.e1 = *a.e1;
  if (a.e2) params.e2 = *a.e2;
  RandomStream rng(a.seed);
  Warnings warnings;
  const Digraph g = sdg(a.nodes, a.edges, params, rng, &warnings);
  report_warnings(warnings, err);

  std::ostringstream edges;
  write_edge_list(g, edges);
  emit(a.output, edges.str(), out);
  // The exact diameter costs one BFS per node, so stats are opt-in.
  if (!a.stats.empty()) {
    emit(a.stats == "-" ? "" : a.stats, json_text(to_json(graph_stats(g))),
         out);
  }
  return kOk;
}

struct EvolveArgs {
  std::string base;
  NodeId new_nodes = 0;
  std::uint64_t new_edges = 0;
  std::optional<double> alpha, beta, e1, e2;
  std::uint64_t seed = 0;
  std::string output, node_list;
};

int cmd_evolve(const EvolveArgs& a, std::ostream& out, std::ostream& err) {
  const Digraph base = read_edge_list(a.base);
  SedgeParams params = sedge_default_params(a.new_nodes, a.new_edges);
  if (a.alpha) params.alpha = *a.alpha;
  if (a.beta) params.beta = *a.beta;
  if (a.e1) params.e1 = *a.e1;
  if (a.e2) params.e2 = *a.e2;
  RandomStream rng(a.seed);
  Warnings warnings;
  const Digraph g = sedge(base, a.new_nodes, a.new_edges, params, rng,
                          &warnings);
  report_warnings(warnings, err);

  std::ostringstream edges;
  write_edge_list(g, edges);
  emit(a.output, edges.str(), out);

  std::vector<NodeId> fresh(a.new_nodes);
  std::iota(fresh.begin(), fresh.end(), base.node_count());
  const std::string list_path =
      !a.node_list.empty() ? a.node_list
                           : (a.output.empty() ? "" : a.output + ".new");
  if (!list_path.empty()) write_node_list(fresh, list_path);
  return kOk;
}

struct CompareArgs {
  std::string reference, candidate, output;
  std::string new_nodes, reference_new_nodes, candidate_new_nodes;
  bool spectrum = false;
};

int cmd_compare(const CompareArgs& a, std::ostream& out) {
  const Digraph reference = read_edge_list(a.reference);
  const Digraph candidate = read_edge_list(a.candidate);

  std::string ref_list = a.reference_new_nodes;
  std::string cand_list = a.candidate_new_nodes;
  if (!a.new_nodes.empty()) {
    if (ref_list.empty()) ref_list = a.new_nodes;
    if (cand_list.empty()) cand_list = a.new_nodes;
  }
  if (ref_list.empty() != cand_list.empty()) {
    throw std::invalid_argument(
        "restricting to new nodes needs an id list for both graphs");
  }

  MetricsReport report;
  if (ref_list.empty()) {
    report = compare(reference, candidate, a.spectrum);
  } else {
    const auto ref_ids = read_node_list(ref_list);
    const auto cand_ids = read_node_list(cand_list);
    report = compare_sequences(
        restrict_to_new_nodes(reference, ref_ids, DegreeKind::kIn),
        restrict_to_new_nodes(reference, ref_ids, DegreeKind::kOut),
        restrict_to_new_nodes(candidate, cand_ids, DegreeKind::kIn),
        restrict_to_new_nodes(candidate, cand_ids, DegreeKind::kOut));
    if (a.spectrum) {
      report.spectral_distance =
          spectral_distance(spectrum(reference), spectrum(candidate));
    }
  }
  emit(a.output, json_text(to_json(report)), out);
  return kOk;
}

struct SpectrumArgs {
  std::string input, output;
};

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out) {
  std::ostringstream csv;
  write_spectrum_csv(spectrum(read_edge_list(a.input)), csv);
  emit(a.output, csv.str(), out);
  return kOk;
}

struct TuneArgs {
  std::string reference, model = "sdg", objective;
  double grid_step = 0.05;
  std::size_t replicates = 20;
  std::uint64_t seed = 0;
  std::vector<std::string> axes;
  std::string base, reference_new_nodes;
  unsigned threads = 0;
  std::string dump_grid, output;
};

int cmd_tune(const TuneArgs& a, std::ostream& out) {
  TuneSpec spec;
  spec.model = parse_model(a.model);
  spec.grid_step = a.grid_step;
  spec.replicates = a.replicates;
  spec.base_seed = a.seed;
  spec.threads = a.threads;
  if (!a.objective.empty()) spec.objective = parse_objective(a.objective);
  for (const auto& axis : a.axes) spec.axis_values.insert(parse_axis(axis));

  const Digraph reference = read_edge_list(a.reference);
  std::optional<EvolutionTarget> evolution;
  if (spec.model == ModelKind::kSedge) {
    if (a.base.empty() || a.reference_new_nodes.empty()) {
      throw std::invalid_argument(
          "--model sedge needs --base and --reference-new-nodes");
    }
    evolution = make_evolution_target(read_edge_list(a.base), reference,
                                      read_node_list(a.reference_new_nodes));
  }
  const TuneResult result = tune(reference, spec, std::move(evolution));
  if (!a.dump_grid.empty()) {
    std::ostringstream csv;
    write_score_table_csv(result, csv);
    emit(a.dump_grid, csv.str(), out);
  }
  emit(a.output, json_text(to_json(result)), out);
  return kOk;
}

struct ReportArgs {
  std::string manifest, mode = "static", output;
  ReportOptions options;
  bool tuned = false;
  bool defaults = false;
};

int cmd_report(ReportArgs a, std::ostream& out) {
  if (a.mode == "static") {
    a.options.mode = ReportMode::kStatic;
  } else if (a.mode == "evolution") {
    a.options.mode = ReportMode::kEvolution;
  } else {
    throw std::invalid_argument("--mode must be static or evolution");
  }
  a.options.tuned = a.tuned;
  a.options.defaults = a.defaults || !a.tuned;
  const CorpusManifest manifest = load_manifest(a.manifest);
  std::ostringstream csv;
  write_report_csv(run_report(manifest, a.options), a.options, csv);
  emit(a.output, csv.str(), out);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Sparse digraph generation, evolution and comparison"};
  app.name("sdgen");
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate a graph with SDG");
  generate->add_option("--nodes", gen.nodes, "Number of nodes")->required();
  generate->add_option("--edges", gen.edges, "Number of edges")->required();
  generate->add_option("--e1", gen.e1, "P(uniform source), default 0.45");
  generate->add_option("--e2", gen.e2,
                       "P(in-degree-0 target), default N/E - 0.05");
  generate->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  generate->add_option("-o,--output", gen.output, "Edge-list output file");
  generate->add_option("--stats", gen.stats, "Graph statistics JSON file (- for stdout)");

  EvolveArgs evo;
  auto* evolve = app.add_subcommand("evolve", "Grow a graph with SEDGE");
  evolve->add_option("--base", evo.base, "Edge list to grow")->required();
  evolve->add_option("--new-nodes", evo.new_nodes, "Nodes to add")->required();
  evolve->add_option("--new-edges", evo.new_edges, "Edges to add")->required();
  evolve->add_option("--alpha", evo.alpha, "default 0.5");
  evolve->add_option("--beta", evo.beta, "default 0.4");
  evolve->add_option("--e1", evo.e1, "default 0.45");
  evolve->add_option("--e2", evo.e2, "default N_new/E_new - 0.05");
  evolve->add_option("--seed", evo.seed, "Random seed")->capture_default_str();
  evolve->add_option("-o,--output", evo.output, "Edge-list output file");
  evolve->add_option("--new-node-list", evo.node_list,
                     "Where to write the new node ids (default OUTPUT.new)");

  CompareArgs cmp;
  auto* compare_cmd =
      app.add_subcommand("compare", "KS and MSD degree metrics of two graphs");
  compare_cmd->add_option("--reference", cmp.reference)->required();
  compare_cmd->add_option("--candidate", cmp.candidate)->required();
  compare_cmd->add_option("--new-nodes", cmp.new_nodes,
                          "Id list restricting both graphs");
  compare_cmd->add_option("--reference-new-nodes", cmp.reference_new_nodes);
  compare_cmd->add_option("--candidate-new-nodes", cmp.candidate_new_nodes);
  compare_cmd->add_flag("--spectrum", cmp.spectrum,
                        "Add the spectral distance");
  compare_cmd->add_option("-o,--output", cmp.output, "JSON output file");

  SpectrumArgs spec_args;
  auto* spectrum_cmd = app.add_subcommand(
      "spectrum", "Adjacency eigenvalue magnitudes, descending, as CSV");
  spectrum_cmd->add_option("-i,--input", spec_args.input)->required();
  spectrum_cmd->add_option("-o,--output", spec_args.output, "CSV output file");

  TuneArgs tun;
  auto* tune_cmd = app.add_subcommand("tune", "Grid-search model parameters");
  tune_cmd->add_option("--reference", tun.reference)->required();
  tune_cmd->add_option("--model", tun.model, "sdg, sedge or bollobas")
      ->capture_default_str();
  tune_cmd->add_option("--grid-step", tun.grid_step)->capture_default_str();
  tune_cmd->add_option("--replicates", tun.replicates)->capture_default_str();
  tune_cmd->add_option("--seed", tun.seed)->capture_default_str();
  tune_cmd->add_option("--objective", tun.objective,
                       "minimax_msd or ks_max (default depends on model)");
  tune_cmd->add_option("--axis", tun.axes,
                       "Fix a parameter axis: NAME=v1,v2,...");
  tune_cmd->add_option("--base", tun.base, "sedge: the graph before growth");
  tune_cmd->add_option("--reference-new-nodes", tun.reference_new_nodes,
                       "sedge: new node ids of the reference");
  tune_cmd->add_option("--threads", tun.threads, "0 = all cores");
  tune_cmd->add_option("--dump-grid", tun.dump_grid, "Score table CSV");
  tune_cmd->add_option("-o,--output", tun.output, "JSON output file");

  ReportArgs rep;
  auto* report_cmd =
      app.add_subcommand("report", "Averaged metrics over a graph corpus");
  report_cmd->add_option("--manifest", rep.manifest)->required();
  report_cmd->add_option("--mode", rep.mode, "static or evolution")
      ->capture_default_str();
  report_cmd->add_option("--runs", rep.options.runs)->capture_default_str();
  report_cmd->add_flag("--tuned", rep.tuned, "Evaluate tuned parameters");
  report_cmd->add_flag("--defaults", rep.defaults,
                       "Evaluate default parameters");
  report_cmd->add_option("--seed", rep.options.seed)->capture_default_str();
  report_cmd->add_option("--grid-step", rep.options.grid_step)
      ->capture_default_str();
  report_cmd->add_option("--tune-replicates", rep.options.tune_replicates)
      ->capture_default_str();
  report_cmd->add_option("--threads", rep.options.threads, "0 = all cores");
  report_cmd->add_option("-o,--output", rep.output, "CSV output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return cmd_generate(gen, out, err);
    if (*evolve) return cmd_evolve(evo, out, err);
    if (*compare_cmd) return cmd_compare(cmp, out);
    if (*spectrum_cmd) return cmd_spectrum(spec_args, out);
    if (*tune_cmd) return cmd_tune(tun, out);
    if (*report_cmd) return cmd_report(rep, out);
  } catch (const ResampleLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  }
  return kUsage;
}

}  // namespace sdgen::cli
