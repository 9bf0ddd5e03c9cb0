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

// Grid-search fitting of generator parameters to a reference graph.
//
// A model is evaluated at a parameter point by generating `replicates` graphs
// with seeds base_seed + 0, 1, ... (the same seeds at every point) and
// averaging a per-replicate objective over them.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdgen/digraph.h"
#include "sdgen/generators.h"
#include "sdgen/metrics.h"
#include "sdgen/random.h"

namespace sdgen {

enum class ModelKind { kSdg, kSedge, kBollobas };
enum class Objective {
  kMinimaxMsd,  // max(MSD_in, MSD_out)
  kKsMax,       // max(KS_in, KS_out)
};

const char* to_string(ModelKind model);
const char* to_string(Objective objective);
/// Throws std::invalid_argument for unknown names.
ModelKind parse_model(const std::string& name);
Objective parse_objective(const std::string& name);

/// kMinimaxMsd for node-preserving models, kKsMax for bollobas.
Objective default_objective(ModelKind model);

/// Parameter names of a model, in grid (and tie-break) order:
///   sdg      e1, e2
///   sedge    alpha, beta, e1, e2
///   bollobas alpha, gamma, delta   (beta = 1 - alpha - gamma,
///                                   delta_in = delta_out = delta)
std::vector<std::string> parameter_names(ModelKind model);

using ParamPoint = std::vector<double>;

/// What the evolution model grows and which reference nodes count as new.
/// The reference graph itself is the evolved (second) version.
struct EvolutionTarget {
  Digraph base;
  /// Ids of the new nodes in the reference graph.
  std::vector<NodeId> reference_new_nodes;
  NodeId n_new_nodes = 0;
  std::uint64_t n_new_edges = 0;
};

/// Builds the target for evolving `base` into `reference`: N_new is the size
/// of the id list and E_new the edge-count difference (at least 0).
EvolutionTarget make_evolution_target(Digraph base, const Digraph& reference,
                                      std::vector<NodeId> reference_new_nodes);

/// The model, reference and (for sedge) evolution context a point is
/// evaluated against.
class ModelEvaluator {
 public:
  /// Throws std::invalid_argument when sedge lacks an evolution target or
  /// the reference is empty.
  ModelEvaluator(ModelKind model, const Digraph& reference,
                 std::optional<EvolutionTarget> evolution = std::nullopt);

  ModelKind model() const { return model_; }
  const Digraph& reference() const { return reference_; }
  const std::optional<EvolutionTarget>& evolution() const { return evolution_; }

  /// Generates one candidate graph at `point`.
  Digraph generate(const ParamPoint& point, RandomStream& rng) const;

  /// Metrics of a candidate produced by generate(). For sedge only the new
  /// nodes of both graphs are compared.
  MetricsReport measure(const Digraph& candidate) const;

  /// One report per replicate, replicate i seeded with base_seed + i.
  /// Propagates ResampleLimitError from the generator.
  std::vector<MetricsReport> run(const ParamPoint& point,
                                 std::size_t replicates,
                                 std::uint64_t base_seed) const;

  /// The untuned defaults for this reference, as a point.
  ParamPoint default_point() const;

 private:
  ModelKind model_;
  Digraph reference_;
  std::optional<EvolutionTarget> evolution_;
  DegreeSequence reference_in_;
  DegreeSequence reference_out_;
};

struct TuneSpec {
  ModelKind model = ModelKind::kSdg;
  double grid_step = 0.05;
  std::size_t replicates = 20;
  /// Defaults to default_objective(model).
  std::optional<Objective> objective;
  std::uint64_t base_seed = 0;
  /// Explicit values for some parameters, replacing their generated axis.
  std::map<std::string, std::vector<double>> axis_values;
  /// delta axis of the bollobas grid.
  std::vector<double> bollobas_deltas = {0.0, 0.5, 1.0, 2.0};
  /// Worker threads; 0 uses the hardware concurrency.
  unsigned threads = 0;
};

struct TuneResult {
  ModelKind model = ModelKind::kSdg;
  Objective objective = Objective::kMinimaxMsd;
  std::vector<std::string> param_names;
  ParamPoint best_params;
  double best_score = 0.0;
  /// Sample standard deviation of the objective over the replicates at the
  /// optimum.
  double replicate_std = 0.0;
  /// Averaged objective per grid point, ordered lexicographically. Points
  /// where the generator hit its resampling limit score +infinity.
  std::map<ParamPoint, double> score_table;
};

/// Every grid point of `spec` for this evaluator, ascending lexicographically.
/// Axes run over {0, step, 2 step, ..., <= 1}; e2 is kept strictly below N/E
/// (N_new/E_new for sedge), sedge requires alpha + beta <= 1 and bollobas
/// alpha + gamma <= 1.
std::vector<ParamPoint> tuning_grid(const ModelEvaluator& evaluator,
                                    const TuneSpec& spec);

/// Exhaustive grid search. Ties go to the lexicographically smallest point.
/// Throws std::invalid_argument for minimax_msd with bollobas (its node count
/// cannot match) and Error when every grid point is infeasible.
TuneResult tune(const ModelEvaluator& evaluator, const TuneSpec& spec);
TuneResult tune(const Digraph& reference, const TuneSpec& spec,
                std::optional<EvolutionTarget> evolution = std::nullopt);

struct MetricSummary {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation (n - 1)
  std::size_t count = 0;
};

/// Mean and sample standard deviation, single pass (Welford).
MetricSummary summarize(const std::vector<double>& values);

struct StabilityReport {
  MetricSummary ks_in;
  MetricSummary ks_out;
  /// Empty when MSD is unavailable (node counts differ).
  std::optional<MetricSummary> msd_in;
  std::optional<MetricSummary> msd_out;
};

StabilityReport summarize(const std::vector<MetricsReport>& reports);

/// Spread of each metric over `replicates` (>= 2) graphs at a fixed point.
StabilityReport stability_report(const ModelEvaluator& evaluator,
                                 const ParamPoint& point,
                                 std::size_t replicates,
                                 std::uint64_t base_seed = 0);

}  // namespace sdgen
