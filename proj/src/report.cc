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

#include "sdgen/report.h"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "sdgen/edge_list.h"
#include "sdgen/errors.h"
#include "sdgen/serialize.h"

namespace sdgen {
namespace {

std::filesystem::path resolve(const std::filesystem::path& base,
                              const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

// Parses one graph, recording a problem instead of throwing.
std::optional<Digraph> try_read(const std::filesystem::path& path,
                                const std::string& entry,
                                std::vector<std::string>& problems) {
  if (!std::filesystem::exists(path)) {
    problems.push_back(entry + ": missing file " + path.string());
    return std::nullopt;
  }
  try {
    return read_edge_list(path);
  } catch (const ValidationError& e) {
    problems.push_back(entry + ": " + e.what());
    return std::nullopt;
  }
}

struct LoadedPair {
  Digraph first;
  Digraph second;
  std::vector<NodeId> new_nodes;
};

LoadedPair load_pair(const CorpusEntry& entry) {
  return {read_edge_list(entry.first), read_edge_list(entry.second),
          read_node_list(entry.new_nodes)};
}

MetricsReport evaluate(const ModelEvaluator& evaluator, const ParamPoint& point,
                       std::size_t runs, std::uint64_t seed) {
  return average(evaluator.run(point, runs, seed));
}

std::string cell(const std::optional<double>& v) {
  return v ? format_number(*v) : "";
}

std::optional<double> ratio(const std::optional<double>& a,
                            const std::optional<double>& b) {
  if (!a || !b || *b == 0.0) return std::nullopt;
  return *a / *b;
}

void write_metrics(std::ostream& out, const MetricsReport& r) {
  out << ',' << format_number(r.ks_in) << ',' << format_number(r.ks_out)
      << ',' << cell(r.msd_in) << ',' << cell(r.msd_out);
}

}  // namespace

CorpusManifest parse_manifest(const std::string& json_text,
                              const std::filesystem::path& base_dir) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("manifest is not valid JSON: ") +
                          e.what());
  }
  if (!doc.is_array()) throw ValidationError("manifest must be a JSON list");

  CorpusManifest manifest;
  std::vector<std::string> problems;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& item = doc[i];
    const std::string label = "entry " + std::to_string(i);
    if (!item.is_object() || !item.contains("name") ||
        !item["name"].is_string()) {
      problems.push_back(label + ": needs a string \"name\"");
      continue;
    }
    CorpusEntry entry;
    entry.name = item["name"].get<std::string>();
    const std::string where = label + " (" + entry.name + ")";
    auto field = [&](const char* key) -> std::optional<std::filesystem::path> {
      if (!item.contains(key)) return std::nullopt;
      if (!item[key].is_string()) {
        problems.push_back(where + ": \"" + key + "\" must be a string");
        return std::nullopt;
      }
      return resolve(base_dir, item[key].get<std::string>());
    };

    if (auto path = field("path")) {
      entry.path = *path;
      try_read(entry.path, where, problems);
    } else {
      auto first = field("first");
      auto second = field("second");
      auto fresh = field("new_nodes");
      if (!first || !second || !fresh) {
        problems.push_back(where +
                           ": needs \"path\" or \"first\", \"second\" and "
                           "\"new_nodes\"");
        continue;
      }
      entry.first = *first;
      entry.second = *second;
      entry.new_nodes = *fresh;
      auto g1 = try_read(entry.first, where, problems);
      auto g2 = try_read(entry.second, where, problems);
      if (g1 && g2 && g2->node_count() <= g1->node_count()) {
        problems.push_back(where + ": second version has " +
                           std::to_string(g2->node_count()) +
                           " nodes, not more than the first (" +
                           std::to_string(g1->node_count()) + ")");
      }
      if (!std::filesystem::exists(entry.new_nodes)) {
        problems.push_back(where + ": missing file " +
                           entry.new_nodes.string());
      } else {
        try {
          for (NodeId id : read_node_list(entry.new_nodes)) {
            if (g2 && id >= g2->node_count()) {
              problems.push_back(where + ": new node id " +
                                 std::to_string(id) +
                                 " is outside the second version");
              break;
            }
          }
        } catch (const ValidationError& e) {
          problems.push_back(where + ": " + e.what());
        }
      }
    }
    manifest.entries.push_back(std::move(entry));
  }

  if (!problems.empty()) {
    std::ostringstream msg;
    msg << "manifest has " << problems.size() << " problem(s):";
    for (const auto& p : problems) msg << "\n  " << p;
    throw ValidationError(msg.str());
  }
  return manifest;
}

CorpusManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open manifest " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_manifest(text.str(), path.parent_path());
}

MetricsReport average(const std::vector<MetricsReport>& reports) {
  const StabilityReport s = summarize(reports);
  MetricsReport mean;
  mean.ks_in = s.ks_in.mean;
  mean.ks_out = s.ks_out.mean;
  if (s.msd_in) mean.msd_in = s.msd_in->mean;
  if (s.msd_out) mean.msd_out = s.msd_out->mean;
  return mean;
}

std::vector<ReportRow> run_report(const CorpusManifest& manifest,
                                  const ReportOptions& options) {
  if (options.runs == 0) throw std::invalid_argument("runs must be >= 1");
  const bool want_pairs = options.mode == ReportMode::kEvolution;
  const ModelKind model = want_pairs ? ModelKind::kSedge : ModelKind::kSdg;

  std::vector<ReportRow> rows;
  for (const CorpusEntry& entry : manifest.entries) {
    if (entry.is_pair() != want_pairs) continue;

    ReportRow row;
    row.name = entry.name;
    std::optional<ModelEvaluator> evaluator;
    if (want_pairs) {
      LoadedPair pair = load_pair(entry);
      EvolutionTarget target = make_evolution_target(
          std::move(pair.first), pair.second, std::move(pair.new_nodes));
      row.size_a = target.n_new_nodes;
      row.size_b = target.n_new_edges;
      evaluator.emplace(model, pair.second, std::move(target));
    } else {
      Digraph g = read_edge_list(entry.path);
      row.size_a = g.node_count();
      row.size_b = g.edge_count();
      evaluator.emplace(model, g);
    }

    if (options.defaults || !options.tuned) {
      row.defaults = evaluate(*evaluator, evaluator->default_point(),
                              options.runs, options.seed);
    }
    if (options.tuned) {
      TuneSpec spec;
      spec.model = model;
      spec.grid_step = options.grid_step;
      spec.replicates = options.tune_replicates;
      spec.base_seed = options.seed;
      spec.threads = options.threads;
      const TuneResult best = tune(*evaluator, spec);
      row.tuned =
          evaluate(*evaluator, best.best_params, options.runs, options.seed);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_report_csv(const std::vector<ReportRow>& rows,
                      const ReportOptions& options, std::ostream& out) {
  static constexpr const char* kMetrics[] = {"ks_in", "ks_out", "msd_in",
                                             "msd_out"};
  const bool both = options.defaults && options.tuned;
  out << "name,"
      << (options.mode == ReportMode::kStatic ? "nodes,edges" : "n_new,e_new");
  for (const char* m : kMetrics) out << ',' << m;
  if (both) {
    for (const char* m : kMetrics) out << ',' << m << "_tuned";
    for (const char* m : kMetrics) out << ',' << m << "_ratio";
  }
  out << '\n';

  for (const ReportRow& row : rows) {
    out << row.name << ',' << row.size_a << ',' << row.size_b;
    const MetricsReport& primary = row.defaults ? *row.defaults : *row.tuned;
    write_metrics(out, primary);
    if (both) {
      const MetricsReport& d = *row.defaults;
      const MetricsReport& t = *row.tuned;
      write_metrics(out, t);
      out << ',' << cell(ratio(d.ks_in, t.ks_in)) << ','
          << cell(ratio(d.ks_out, t.ks_out)) << ','
          << cell(ratio(d.msd_in, t.msd_in)) << ','
          << cell(ratio(d.msd_out, t.msd_out));
    }
    out << '\n';
  }
}

}  // namespace sdgen
