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


#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sdgen/generators.h"
#include "sdgen/tuning.h"

namespace sdgen {
namespace {

Digraph reference_graph(std::uint64_t seed = 1) {
  RandomStream rng(seed);
  return sdg(200, 1000, {0.45, 0.1}, rng);
}

double minimax(const MetricsReport& r) { return std::max(*r.msd_in, *r.msd_out); }

TEST_CASE("names and parsing") {
  CHECK(parse_model("sdg") == ModelKind::kSdg);
  CHECK(parse_model("sedge") == ModelKind::kSedge);
  CHECK(parse_model("bollobas") == ModelKind::kBollobas);
  CHECK_THROWS_AS(parse_model("gdgnc"), std::invalid_argument);
  CHECK(parse_objective("ks_max") == Objective::kKsMax);
  CHECK(to_string(Objective::kMinimaxMsd) == std::string("minimax_msd"));
  CHECK(default_objective(ModelKind::kBollobas) == Objective::kKsMax);
  CHECK(default_objective(ModelKind::kSdg) == Objective::kMinimaxMsd);
  CHECK(parameter_names(ModelKind::kSedge).size() == 4);
}

TEST_CASE("a single-point grid returns that point and its average") {
  const ModelEvaluator evaluator(ModelKind::kSdg, reference_graph());
  TuneSpec spec;
  spec.replicates = 5;
  spec.base_seed = 40;
  spec.axis_values = {{"e1", {0.3}}, {"e2", {0.1}}};
  const TuneResult r = tune(evaluator, spec);
  CHECK(r.best_params == ParamPoint{0.3, 0.1});
  CHECK(r.score_table.size() == 1);

  const auto reports = evaluator.run({0.3, 0.1}, 5, 40);
  double sum = 0.0;
  for (const auto& rep : reports) sum += minimax(rep);
  CHECK(r.best_score == doctest::Approx(sum / 5).epsilon(1e-12));
}

TEST_CASE("grid respects the e2 cap and step") {
  const ModelEvaluator evaluator(ModelKind::kSdg, reference_graph());
  TuneSpec spec;
  spec.grid_step = 0.1;
  const auto grid = tuning_grid(evaluator, spec);
  CHECK(grid.size() == 11 * 2);  // e2 in {0, 0.1}, strictly below 0.2
  for (const auto& p : grid) CHECK(p[1] < 0.2);
  CHECK(std::is_sorted(grid.begin(), grid.end()));
  CHECK(grid.back()[0] == 1.0);
  spec.grid_step = 0.0;
  CHECK_THROWS_AS(tuning_grid(evaluator, spec), std::invalid_argument);
}

TEST_CASE("sedge and bollobas grids bound the branch probabilities") {
  const ModelEvaluator bol(ModelKind::kBollobas, reference_graph());
  TuneSpec spec;
  spec.model = ModelKind::kBollobas;
  spec.grid_step = 0.25;
  const auto grid = tuning_grid(bol, spec);
  CHECK(grid.size() == 15 * 4);
  for (const auto& p : grid) CHECK(p[0] + p[1] <= 1.0 + 1e-9);
}

TEST_CASE("the optimum is no worse than the defaults") {
  const Digraph ref = reference_graph(3);
  const ModelEvaluator evaluator(ModelKind::kSdg, ref);
  TuneSpec spec;
  spec.grid_step = 0.05;
  spec.replicates = 3;
  spec.axis_values = {{"e1", {0.3, 0.45, 0.6}}};
  const TuneResult r = tune(evaluator, spec);
  // Defaults are (0.45, 0.15) here, which lies on the 0.05 grid.
  const ParamPoint defaults = evaluator.default_point();
  CHECK(defaults[0] == 0.45);
  CHECK(defaults[1] == doctest::Approx(0.15));
  ParamPoint snapped = {0.45, std::round(defaults[1] / 0.05) * 0.05};
  snapped[1] = std::round(snapped[1] * 1e12) / 1e12;
  REQUIRE(r.score_table.count(snapped) == 1);
  for (const auto& [point, score] : r.score_table) CHECK(r.best_score <= score);
  CHECK(r.best_score <= r.score_table.at(snapped));
}

TEST_CASE("tune is deterministic and independent of thread count") {
  const ModelEvaluator evaluator(ModelKind::kSdg, reference_graph(4));
  TuneSpec spec;
  spec.grid_step = 0.25;
  spec.replicates = 3;
  spec.axis_values = {{"e2", {0.0, 0.1}}};
  spec.threads = 1;
  const TuneResult a = tune(evaluator, spec);
  spec.threads = 3;
  const TuneResult b = tune(evaluator, spec);
  CHECK(a.score_table == b.score_table);
  CHECK(a.best_params == b.best_params);
  CHECK(a.replicate_std == b.replicate_std);
  // e2 = 0 sends every edge to the first target, which saturates.
  CHECK(std::isinf(a.score_table.at({0.0, 0.0})));
  CHECK(std::isfinite(a.best_score));
}

TEST_CASE("bollobas tuning") {
  const ModelEvaluator evaluator(ModelKind::kBollobas, reference_graph());
  TuneSpec spec;
  spec.model = ModelKind::kBollobas;
  spec.replicates = 2;
  spec.axis_values = {{"alpha", {0.4}}, {"gamma", {0.4}}, {"delta", {1.0}}};
  spec.objective = Objective::kMinimaxMsd;
  CHECK_THROWS_AS(tune(evaluator, spec), std::invalid_argument);
  spec.objective.reset();
  const TuneResult r = tune(evaluator, spec);
  CHECK(r.objective == Objective::kKsMax);
  CHECK(r.best_score >= 0.0);
  CHECK(r.best_score <= 1.0);
}

TEST_CASE("sedge evaluation compares new nodes only") {
  RandomStream rng(6);
  const Digraph base = sdg(150, 600, {0.45, 0.2}, rng);
  const Digraph next = sedge(base, 40, 200, sedge_default_params(40, 200), rng);
  std::vector<NodeId> fresh(40);
  std::iota(fresh.begin(), fresh.end(), 150);
  EvolutionTarget target = make_evolution_target(base, next, fresh);
  CHECK(target.n_new_nodes == 40);
  CHECK(target.n_new_edges == 200);
  const ModelEvaluator evaluator(ModelKind::kSedge, next, target);
  RandomStream gen(1);
  const Digraph cand = evaluator.generate(evaluator.default_point(), gen);
  CHECK(cand.node_count() == 190);
  CHECK(cand.edge_count() == 800);
  const MetricsReport m = evaluator.measure(cand);
  CHECK(m.msd_in);
  CHECK_THROWS_AS(ModelEvaluator(ModelKind::kSedge, next),
                  std::invalid_argument);

  TuneSpec spec;
  spec.model = ModelKind::kSedge;
  spec.grid_step = 0.5;
  spec.replicates = 2;
  const TuneResult r = tune(evaluator, spec);
  CHECK(r.param_names.size() == 4);
  CHECK(r.best_params.size() == 4);
}

TEST_CASE("summaries match a two-pass variance") {
  RandomStream rng(12);
  std::vector<double> values(257);
  for (auto& v : values) v = 1e6 + rng.next_double();
  const MetricSummary s = summarize(values);
  const double mean =
      std::accumulate(values.begin(), values.end(), 0.0) / values.size();
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  CHECK(s.count == 257);
  CHECK(s.mean == doctest::Approx(mean).epsilon(1e-14));
  CHECK(s.stddev == doctest::Approx(std::sqrt(ss / 256)).epsilon(1e-9));
  const MetricSummary flat = summarize({0.2, 0.2, 0.2});
  CHECK(flat.stddev == 0.0);
}

TEST_CASE("stability report") {
  const ModelEvaluator evaluator(ModelKind::kSdg, reference_graph());
  const StabilityReport s =
      stability_report(evaluator, evaluator.default_point(), 10, 5);
  CHECK(s.ks_in.count == 10);
  CHECK(s.ks_in.stddev > 0.0);
  CHECK(s.msd_out);
  const StabilityReport again =
      stability_report(evaluator, evaluator.default_point(), 10, 5);
  CHECK(again.ks_in.stddev == s.ks_in.stddev);
  CHECK_THROWS_AS(stability_report(evaluator, evaluator.default_point(), 1),
                  std::invalid_argument);
}

}  // namespace
}  // namespace sdgen
