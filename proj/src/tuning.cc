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

#include "sdgen/tuning.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "sdgen/errors.h"

namespace sdgen {
namespace {

constexpr double kInfeasible = std::numeric_limits<double>::infinity();

// Removes binary noise such as 0.30000000000000004 from grid values.
double tidy(double v) { return std::round(v * 1e12) / 1e12; }

SdgParams to_sdg(const ParamPoint& p) { return {p.at(0), p.at(1)}; }

SedgeParams to_sedge(const ParamPoint& p) {
  return {p.at(0), p.at(1), p.at(2), p.at(3)};
}

BollobasParams to_bollobas(const ParamPoint& p) {
  const double alpha = p.at(0);
  const double gamma = p.at(1);
  return {alpha, std::max(0.0, 1.0 - alpha - gamma), gamma, p.at(2), p.at(2)};
}

double objective_value(const MetricsReport& r, Objective objective) {
  if (objective == Objective::kKsMax) return std::max(r.ks_in, r.ks_out);
  if (!r.msd_in || !r.msd_out) {
    throw std::invalid_argument(
        "minimax_msd needs equal node counts; use ks_max");
  }
  return std::max(*r.msd_in, *r.msd_out);
}

std::vector<double> axis(double step) {
  const auto last = static_cast<std::size_t>(std::floor(1.0 / step + 1e-9));
  std::vector<double> values;
  for (std::size_t k = 0; k <= last; ++k) {
    values.push_back(tidy(std::min(1.0, static_cast<double>(k) * step)));
  }
  return values;
}

// Cartesian product in lexicographic order.
std::vector<ParamPoint> product(const std::vector<std::vector<double>>& axes) {
  std::vector<ParamPoint> points{{}};
  for (const auto& values : axes) {
    std::vector<ParamPoint> next;
    for (const auto& prefix : points) {
      for (double v : values) {
        ParamPoint p = prefix;
        p.push_back(v);
        next.push_back(std::move(p));
      }
    }
    points = std::move(next);
  }
  return points;
}

struct PointOutcome {
  double mean = kInfeasible;
  double stddev = kInfeasible;
};

}  // namespace

const char* to_string(ModelKind model) {
  switch (model) {
    case ModelKind::kSdg:
      return "sdg";
    case ModelKind::kSedge:
      return "sedge";
    case ModelKind::kBollobas:
      return "bollobas";
  }
  return "?";
}

const char* to_string(Objective objective) {
  return objective == Objective::kMinimaxMsd ? "minimax_msd" : "ks_max";
}

ModelKind parse_model(const std::string& name) {
  if (name == "sdg") return ModelKind::kSdg;
  if (name == "sedge") return ModelKind::kSedge;
  if (name == "bollobas") return ModelKind::kBollobas;
  throw std::invalid_argument("unknown model '" + name + "'");
}

Objective parse_objective(const std::string& name) {
  if (name == "minimax_msd") return Objective::kMinimaxMsd;
  if (name == "ks_max") return Objective::kKsMax;
  throw std::invalid_argument("unknown objective '" + name + "'");
}

Objective default_objective(ModelKind model) {
  return model == ModelKind::kBollobas ? Objective::kKsMax
                                       : Objective::kMinimaxMsd;
}

std::vector<std::string> parameter_names(ModelKind model) {
  switch (model) {
    case ModelKind::kSdg:
      return {"e1", "e2"};
    case ModelKind::kSedge:
      return {"alpha", "beta", "e1", "e2"};
    case ModelKind::kBollobas:
      return {"alpha", "gamma", "delta"};
  }
  return {};
}

EvolutionTarget make_evolution_target(Digraph base, const Digraph& reference,
                                      std::vector<NodeId> reference_new_nodes) {
  EvolutionTarget target;
  target.n_new_nodes = static_cast<NodeId>(reference_new_nodes.size());
  target.n_new_edges = reference.edge_count() > base.edge_count()
                           ? reference.edge_count() - base.edge_count()
                           : 0;
  target.base = std::move(base);
  target.reference_new_nodes = std::move(reference_new_nodes);
  return target;
}

ModelEvaluator::ModelEvaluator(ModelKind model, const Digraph& reference,
                               std::optional<EvolutionTarget> evolution)
    : model_(model), reference_(reference), evolution_(std::move(evolution)) {
  if (reference_.node_count() == 0) {
    throw std::invalid_argument("reference graph has no nodes");
  }
  if (model_ == ModelKind::kSedge) {
    if (!evolution_) {
      throw std::invalid_argument(
          "sedge needs a base graph and the reference's new-node ids");
    }
    reference_in_ = restrict_to_new_nodes(
        reference_, evolution_->reference_new_nodes, DegreeKind::kIn);
    reference_out_ = restrict_to_new_nodes(
        reference_, evolution_->reference_new_nodes, DegreeKind::kOut);
    if (reference_in_.values.empty()) {
      throw std::invalid_argument("sedge reference has no new nodes");
    }
  } else {
    if (reference_.edge_count() == 0) {
      throw std::invalid_argument("reference graph has no edges");
    }
    reference_in_ = degree_sequence(reference_, DegreeKind::kIn);
    reference_out_ = degree_sequence(reference_, DegreeKind::kOut);
  }
}

Digraph ModelEvaluator::generate(const ParamPoint& point,
                                 RandomStream& rng) const {
  switch (model_) {
    case ModelKind::kSdg:
      return sdg(reference_.node_count(), reference_.edge_count(),
                 to_sdg(point), rng);
    case ModelKind::kSedge:
      return sedge(evolution_->base, evolution_->n_new_nodes,
                   evolution_->n_new_edges, to_sedge(point), rng);
    case ModelKind::kBollobas:
      return bollobas_generate(reference_.edge_count(), to_bollobas(point),
                               rng);
  }
  throw std::logic_error("unknown model");
}

MetricsReport ModelEvaluator::measure(const Digraph& candidate) const {
  if (model_ != ModelKind::kSedge) {
    return compare_sequences(reference_in_, reference_out_,
                             degree_sequence(candidate, DegreeKind::kIn),
                             degree_sequence(candidate, DegreeKind::kOut));
  }
  std::vector<NodeId> fresh(evolution_->n_new_nodes);
  std::iota(fresh.begin(), fresh.end(), evolution_->base.node_count());
  return compare_sequences(
      reference_in_, reference_out_,
      restrict_to_new_nodes(candidate, fresh, DegreeKind::kIn),
      restrict_to_new_nodes(candidate, fresh, DegreeKind::kOut));
}

std::vector<MetricsReport> ModelEvaluator::run(const ParamPoint& point,
                                               std::size_t replicates,
                                               std::uint64_t base_seed) const {
  const RandomStream root(base_seed);
  std::vector<MetricsReport> reports;
  reports.reserve(replicates);
  for (std::size_t i = 0; i < replicates; ++i) {
    RandomStream rng = root.substream(i);
    reports.push_back(measure(generate(point, rng)));
  }
  return reports;
}

ParamPoint ModelEvaluator::default_point() const {
  switch (model_) {
    case ModelKind::kSdg: {
      const SdgParams p =
          sdg_default_params(reference_.node_count(), reference_.edge_count());
      return {p.e1, p.e2};
    }
    case ModelKind::kSedge: {
      const SedgeParams p = sedge_default_params(evolution_->n_new_nodes,
                                                 evolution_->n_new_edges);
      return {p.alpha, p.beta, p.e1, p.e2};
    }
    case ModelKind::kBollobas: {
      const BollobasParams p;
      return {p.alpha, p.gamma, p.delta_in};
    }
  }
  return {};
}

std::vector<ParamPoint> tuning_grid(const ModelEvaluator& evaluator,
                                    const TuneSpec& spec) {
  if (!(spec.grid_step > 0.0 && spec.grid_step <= 1.0)) {
    throw std::invalid_argument("grid_step must lie in (0, 1]");
  }
  const auto names = parameter_names(evaluator.model());
  for (const auto& [name, values] : spec.axis_values) {
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw std::invalid_argument("model " +
                                  std::string(to_string(evaluator.model())) +
                                  " has no parameter '" + name + "'");
    }
    if (values.empty()) {
      throw std::invalid_argument("no values given for '" + name + "'");
    }
  }

  // Upper bound for e2: the expected number of in-degree-0 picks must stay
  // below the number of candidate nodes.
  double e2_cap = 1.0;
  if (evaluator.model() == ModelKind::kSdg) {
    e2_cap = static_cast<double>(evaluator.reference().node_count()) /
             static_cast<double>(evaluator.reference().edge_count());
  } else if (evaluator.model() == ModelKind::kSedge &&
             evaluator.evolution()->n_new_edges > 0) {
    e2_cap = static_cast<double>(evaluator.evolution()->n_new_nodes) /
             static_cast<double>(evaluator.evolution()->n_new_edges);
  }

  std::vector<std::vector<double>> axes;
  for (const auto& name : names) {
    if (auto it = spec.axis_values.find(name); it != spec.axis_values.end()) {
      std::vector<double> values = it->second;
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
      axes.push_back(std::move(values));
    } else if (name == "delta") {
      std::vector<double> values = spec.bollobas_deltas;
      std::sort(values.begin(), values.end());
      axes.push_back(std::move(values));
    } else if (name == "e2") {
      std::vector<double> values;
      for (double v : axis(spec.grid_step)) {
        if (v < e2_cap - 1e-12) values.push_back(v);
      }
      axes.push_back(std::move(values));
    } else {
      axes.push_back(axis(spec.grid_step));
    }
  }

  std::vector<ParamPoint> points;
  for (auto& p : product(axes)) {
    if (evaluator.model() != ModelKind::kSdg && p[0] + p[1] > 1.0 + 1e-9) {
      continue;  // alpha + beta (sedge) or alpha + gamma (bollobas)
    }
    points.push_back(std::move(p));
  }
  return points;
}

TuneResult tune(const ModelEvaluator& evaluator, const TuneSpec& spec) {
  if (spec.replicates == 0) {
    throw std::invalid_argument("replicates must be >= 1");
  }
  if (spec.model != evaluator.model()) {
    throw std::invalid_argument("tune spec and evaluator disagree on model");
  }
  const Objective objective =
      spec.objective.value_or(default_objective(spec.model));
  if (spec.model == ModelKind::kBollobas &&
      objective == Objective::kMinimaxMsd) {
    throw std::invalid_argument(
        "bollobas does not preserve the node count, so MSD is unavailable; "
        "use the ks_max objective");
  }

  const std::vector<ParamPoint> points = tuning_grid(evaluator, spec);
  if (points.empty()) throw std::invalid_argument("tuning grid is empty");

  std::vector<PointOutcome> outcomes(points.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        std::vector<double> scores;
        for (const auto& r :
             evaluator.run(points[i], spec.replicates, spec.base_seed)) {
          scores.push_back(objective_value(r, objective));
        }
        const MetricSummary s = summarize(scores);
        outcomes[i] = {s.mean, s.stddev};
      } catch (const ResampleLimitError&) {
        outcomes[i] = {};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = points.size();
      }
    }
  };

  unsigned threads =
      spec.threads != 0 ? spec.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1,
                                 static_cast<unsigned>(points.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  TuneResult result;
  result.model = spec.model;
  result.objective = objective;
  result.param_names = parameter_names(spec.model);
  result.best_score = kInfeasible;
  std::size_t best = points.size();
  for (std::size_t i = 0; i < points.size(); ++i) {
    result.score_table.emplace(points[i], outcomes[i].mean);
  }
  // points are in lexicographic order, so the first strict minimum wins ties.
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (outcomes[i].mean < result.best_score) {
      result.best_score = outcomes[i].mean;
      best = i;
    }
  }
  if (best == points.size()) {
    throw Error("every grid point exhausted the generator's resampling limit");
  }
  result.best_params = points[best];
  result.replicate_std = outcomes[best].stddev;
  return result;
}

TuneResult tune(const Digraph& reference, const TuneSpec& spec,
                std::optional<EvolutionTarget> evolution) {
  return tune(ModelEvaluator(spec.model, reference, std::move(evolution)),
              spec);
}

MetricSummary summarize(const std::vector<double>& values) {
  MetricSummary s;
  double m2 = 0.0;
  for (double x : values) {
    ++s.count;
    const double delta = x - s.mean;
    s.mean += delta / static_cast<double>(s.count);
    m2 += delta * (x - s.mean);
  }
  s.stddev = s.count > 1 ? std::sqrt(m2 / static_cast<double>(s.count - 1))
                         : 0.0;
  return s;
}

StabilityReport summarize(const std::vector<MetricsReport>& reports) {
  std::vector<double> ks_in, ks_out, msd_in, msd_out;
  for (const auto& r : reports) {
    ks_in.push_back(r.ks_in);
    ks_out.push_back(r.ks_out);
    if (r.msd_in) msd_in.push_back(*r.msd_in);
    if (r.msd_out) msd_out.push_back(*r.msd_out);
  }
  StabilityReport report{summarize(ks_in), summarize(ks_out), {}, {}};
  if (!msd_in.empty()) report.msd_in = summarize(msd_in);
  if (!msd_out.empty()) report.msd_out = summarize(msd_out);
  return report;
}

StabilityReport stability_report(const ModelEvaluator& evaluator,
                                 const ParamPoint& point,
                                 std::size_t replicates,
                                 std::uint64_t base_seed) {
  if (replicates < 2) {
    throw std::invalid_argument("stability_report needs >= 2 replicates");
  }
  return summarize(evaluator.run(point, replicates, base_seed));
}

}  // namespace sdgen
