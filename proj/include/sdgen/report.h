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

// Corpus-level reproduction of the static and evolution comparison tables.
//
// A manifest is a JSON list. Static entries name one graph:
//   {"name": "ant", "path": "ant.edges"}
// Evolution entries name two consecutive versions and the ids of the nodes
// that are new in the second one:
//   {"name": "ant.1.4.1", "first": "a.edges", "second": "b.edges",
//    "new_nodes": "b.new"}
// Relative paths are resolved against the manifest's directory.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sdgen/digraph.h"
#include "sdgen/tuning.h"

namespace sdgen {

struct CorpusEntry {
  std::string name;
  /// Static entries: the graph.
  std::filesystem::path path;
  /// Evolution entries.
  std::filesystem::path first;
  std::filesystem::path second;
  std::filesystem::path new_nodes;

  bool is_pair() const { return path.empty(); }
};

struct CorpusManifest {
  std::vector<CorpusEntry> entries;
};

/// Parses the manifest and checks every entry: files exist and parse, and for
/// pairs the second version has more nodes than the first and the new-node
/// ids lie inside it. All problems are collected and reported together in a
/// single ValidationError.
CorpusManifest load_manifest(const std::filesystem::path& path);
CorpusManifest parse_manifest(const std::string& json_text,
                              const std::filesystem::path& base_dir);

enum class ReportMode { kStatic, kEvolution };

struct ReportOptions {
  ReportMode mode = ReportMode::kStatic;
  std::size_t runs = 100;
  bool defaults = true;
  bool tuned = false;
  std::uint64_t seed = 0;
  /// Used when tuned is set.
  double grid_step = 0.05;
  std::size_t tune_replicates = 20;
  unsigned threads = 0;
};

struct ReportRow {
  std::string name;
  std::uint64_t size_a = 0;  // nodes (static) or N_new (evolution)
  std::uint64_t size_b = 0;  // edges (static) or E_new (evolution)
  std::optional<MetricsReport> defaults;
  std::optional<MetricsReport> tuned;
};

/// Averages KS/MSD over `runs` generated graphs per entry (sdg for static
/// mode, sedge for evolution mode; entries of the other kind are skipped).
/// Evolution metrics cover only the new nodes.
std::vector<ReportRow> run_report(const CorpusManifest& manifest,
                                  const ReportOptions& options);

/// Columns: name, nodes/edges (or n_new/e_new), then ks_in, ks_out, msd_in,
/// msd_out for whichever setting ran. With both settings the plain columns
/// hold the defaults, followed by *_tuned and *_ratio (defaults / tuned).
void write_report_csv(const std::vector<ReportRow>& rows,
                      const ReportOptions& options, std::ostream& out);

/// Mean of each metric over the reports; MSD means skip missing values.
MetricsReport average(const std::vector<MetricsReport>& reports);

}  // namespace sdgen
