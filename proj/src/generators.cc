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

#include "sdgen/generators.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sdgen/errors.h"
#include "sdgen/sampling.h"

namespace sdgen {
namespace {

void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << name << " must lie in [0, 1], got " << p;
    throw std::invalid_argument(msg.str());
  }
}

void warn(Warnings* warnings, std::string message) {
  if (warnings != nullptr) warnings->push_back(std::move(message));
}

void check_regime(std::uint64_t n_nodes, std::uint64_t n_edges, double e2,
                  Warnings* warnings) {
  if (n_edges == 0 || n_nodes == 0) return;
  const double per_node =
      static_cast<double>(n_edges) / static_cast<double>(n_nodes);
  if (per_node > kSparseEdgesPerNode) {
    std::ostringstream msg;
    msg << "E/N = " << per_node << " exceeds the sparse regime ("
        << kSparseEdgesPerNode << ")";
    warn(warnings, msg.str());
  }
  if (e2 >= 1.0 / per_node) {
    std::ostringstream msg;
    msg << "e2 = " << e2 << " is not below N/E = " << 1.0 / per_node
        << "; in-degree-0 nodes will run out";
    warn(warnings, msg.str());
  }
}

void check_capacity(std::uint64_t n_nodes, std::uint64_t n_edges) {
  if (n_edges > simple_capacity(n_nodes)) {
    throw CapacityError(std::to_string(n_edges) +
                        " edges do not fit in a simple digraph with " +
                        std::to_string(n_nodes) + " nodes (max " +
                        std::to_string(simple_capacity(n_nodes)) + ")");
  }
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

// Inserts n_edges proposals into g, redrawing rejected ones.
template <typename Propose>
void insert_edges(Digraph& g, DegreeSampler& sampler, std::uint64_t n_edges,
                  const char* model, Propose&& propose) {
  const std::uint64_t budget = kResampleFactor * n_edges;
  std::uint64_t rejected = 0;
  for (std::uint64_t t = 1; t <= n_edges; ++t) {
    for (;;) {
      const Edge e = propose();
      if (g.add_edge(e.src, e.dst) == AddResult::kAdded) {
        sampler.on_edge_added(e.src, e.dst);
        break;
      }
      if (++rejected > budget) {
        throw ResampleLimitError(
            t, std::string(model) + ": resampling limit of " +
                   std::to_string(budget) +
                   " rejected proposals exhausted at edge " +
                   std::to_string(t) + " of " + std::to_string(n_edges));
      }
    }
  }
}

// One application of the e1/e2 rules: source from `sources`, target from
// `targets`. The source is drawn first.
Edge propose_edge(const DegreeSampler& sampler, NodeRange sources,
                  NodeRange targets, double e1, double e2, RandomStream& rng) {
  const SampleMode out_mode = rng.bernoulli(e1) ? SampleMode::kUniform
                                                : SampleMode::kPreferentialOut;
  const NodeId src = sampler.sample(sources, out_mode, rng);
  const SampleMode in_mode = rng.bernoulli(e2) ? SampleMode::kUniformZeroIn
                                               : SampleMode::kPreferentialIn;
  const NodeId dst = sampler.sample(targets, in_mode, rng);
  return {src, dst};
}

}  // namespace

void SdgParams::validate() const {
  require_probability(e1, "e1");
  require_probability(e2, "e2");
}

void SedgeParams::validate() const {
  require_probability(alpha, "alpha");
  require_probability(beta, "beta");
  require_probability(e1, "e1");
  require_probability(e2, "e2");
  if (alpha + beta > 1.0 + 1e-12) {
    throw std::invalid_argument("alpha + beta must not exceed 1");
  }
}

void BollobasParams::validate() const {
  require_probability(alpha, "alpha");
  require_probability(beta, "beta");
  require_probability(gamma, "gamma");
  if (std::abs(alpha + beta + gamma - 1.0) > 1e-12) {
    throw std::invalid_argument("alpha + beta + gamma must equal 1");
  }
  if (!(delta_in >= 0.0) || !(delta_out >= 0.0)) {
    throw std::invalid_argument("delta_in and delta_out must be >= 0");
  }
}

SdgParams sdg_default_params(std::uint64_t n_nodes, std::uint64_t n_edges) {
  if (n_nodes == 0 || n_edges == 0) {
    throw std::invalid_argument("default parameters need N >= 1 and E >= 1");
  }
  return {0.45, clamp01(static_cast<double>(n_nodes) /
                            static_cast<double>(n_edges) -
                        0.05)};
}

SedgeParams sedge_default_params(std::uint64_t n_new_nodes,
                                 std::uint64_t n_new_edges) {
  SedgeParams params;
  params.e2 = n_new_edges == 0
                  ? 0.0
                  : clamp01(static_cast<double>(n_new_nodes) /
                                static_cast<double>(n_new_edges) -
                            0.05);
  return params;
}

std::uint64_t simple_capacity(std::uint64_t n_nodes) {
  return n_nodes == 0 ? 0 : n_nodes * (n_nodes - 1);
}

Digraph sdg(NodeId n_nodes, std::uint64_t n_edges, const SdgParams& params,
            RandomStream& rng, Warnings* warnings) {
  params.validate();
  check_capacity(n_nodes, n_edges);
  check_regime(n_nodes, n_edges, params.e2, warnings);

  Digraph g(n_nodes);
  DegreeSampler sampler(g);
  const NodeRange all{0, n_nodes};
  insert_edges(g, sampler, n_edges, "sdg", [&] {
    return propose_edge(sampler, all, all, params.e1, params.e2, rng);
  });
  return g;
}

Digraph sedge(const Digraph& current, NodeId n_new_nodes,
              std::uint64_t n_new_edges, const SedgeParams& params,
              RandomStream& rng, Warnings* warnings) {
  params.validate();
  Digraph g = current;
  const NodeId first_new = g.add_nodes(n_new_nodes);
  check_capacity(g.node_count(), g.edge_count() + n_new_edges);
  check_regime(n_new_nodes, n_new_edges, params.e2, warnings);

  DegreeSampler sampler(g);
  const NodeRange all{0, g.node_count()};
  const NodeRange fresh{first_new, g.node_count()};
  insert_edges(g, sampler, n_new_edges, "sedge", [&] {
    const double branch = rng.next_double();
    if (!fresh.empty()) {
      if (branch < params.alpha) {
        return propose_edge(sampler, all, fresh, params.e1, params.e2, rng);
      }
      if (branch < params.alpha + params.beta) {
        return propose_edge(sampler, fresh, all, params.e1, params.e2, rng);
      }
    }
    return propose_edge(sampler, all, all, params.e1, params.e2, rng);
  });
  return g;
}

Digraph bollobas_generate(std::uint64_t target_edges,
                          const BollobasParams& params, RandomStream& rng,
                          const Digraph& seed) {
  params.validate();
  if (target_edges == 0) {
    throw std::invalid_argument("bollobas_generate: target_edges must be >= 1");
  }
  if (seed.node_count() == 0) {
    throw std::invalid_argument("bollobas_generate: seed graph has no nodes");
  }

  Digraph g = seed;
  std::vector<NodeId> in_tokens;   // one entry per edge: its target
  std::vector<NodeId> out_tokens;  // one entry per edge: its source
  for (const Edge& e : g.edges()) {
    in_tokens.push_back(e.dst);
    out_tokens.push_back(e.src);
  }

  // Draws a node with weight degree + delta via the mixture
  // P(token) = E / (E + delta * N), P(uniform) otherwise.
  auto draw = [&](const std::vector<NodeId>& tokens, double delta) -> NodeId {
    const double edges = static_cast<double>(tokens.size());
    const double total = edges + delta * g.node_count();
    if (total <= 0.0) {
      return static_cast<NodeId>(rng.next_below(g.node_count()));
    }
    if (rng.next_double() * total < edges) {
      return tokens[rng.next_below(tokens.size())];
    }
    return static_cast<NodeId>(rng.next_below(g.node_count()));
  };
  auto commit = [&](NodeId src, NodeId dst) {
    in_tokens.push_back(dst);
    out_tokens.push_back(src);
  };

  const std::uint64_t budget = kResampleFactor * target_edges;
  std::uint64_t rejected = 0;
  while (g.edge_count() < target_edges) {
    const double step = rng.next_double();
    if (step < params.alpha) {
      const NodeId dst = draw(in_tokens, params.delta_in);
      const NodeId src = g.add_nodes(1);
      g.add_edge(src, dst);
      commit(src, dst);
    } else if (step < params.alpha + params.beta) {
      const NodeId src = draw(out_tokens, params.delta_out);
      const NodeId dst = draw(in_tokens, params.delta_in);
      if (g.add_edge(src, dst) == AddResult::kAdded) {
        commit(src, dst);
      } else if (++rejected > budget) {
        throw ResampleLimitError(
            g.edge_count() + 1,
            "bollobas: resampling limit of " + std::to_string(budget) +
                " rejected proposals exhausted at edge " +
                std::to_string(g.edge_count() + 1) + " of " +
                std::to_string(target_edges));
      }
    } else {
      const NodeId src = draw(out_tokens, params.delta_out);
      const NodeId dst = g.add_nodes(1);
      g.add_edge(src, dst);
      commit(src, dst);
    }
  }
  return g;
}

}  // namespace sdgen
