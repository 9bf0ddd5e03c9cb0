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

// Random sparse digraph generators.
//
// All generators produce simple digraphs: a proposal that would create a
// self-loop or a parallel edge is discarded and redrawn. A run may discard at
// most kResampleFactor times as many proposals as the edges it must insert;
// beyond that it throws ResampleLimitError.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sdgen/digraph.h"
#include "sdgen/random.h"

namespace sdgen {

inline constexpr std::size_t kResampleFactor = 100;

/// Above this many edges per node a run is outside the sparse regime and a
/// warning is emitted.
inline constexpr double kSparseEdgesPerNode = 10.0;

/// Non-fatal diagnostics collected during generation.
using Warnings = std::vector<std::string>;

struct SdgParams {
  double e1 = 0.45;  // P(source drawn uniformly) vs. by out-degree
  double e2 = 0.0;   // P(target drawn among in-degree-0 nodes) vs. by in-degree

  /// Throws std::invalid_argument unless both lie in [0, 1].
  void validate() const;
};

struct SedgeParams {
  double alpha = 0.5;  // source from all nodes, target from new nodes
  double beta = 0.4;   // source from new nodes, target from all nodes
  double e1 = 0.45;
  double e2 = 0.0;

  /// All four in [0, 1] and alpha + beta <= 1.
  void validate() const;
};

/// Directed scale-free growth model: each step adds a new node pointing to an
/// existing one (alpha), an edge between existing nodes (beta), or a new node
/// pointed to by an existing one (gamma). Targets are chosen with weight
/// in-degree + delta_in, sources with out-degree + delta_out.
struct BollobasParams {
  double alpha = 0.4;
  double beta = 0.2;
  double gamma = 0.4;
  double delta_in = 1.0;
  double delta_out = 1.0;

  /// Probabilities non-negative and summing to 1 within 1e-12, deltas >= 0.
  void validate() const;
};

/// e1 = 0.45, e2 = clamp(N/E - 0.05, 0, 1).
SdgParams sdg_default_params(std::uint64_t n_nodes, std::uint64_t n_edges);

/// alpha = 0.5, beta = 0.4, e1 = 0.45, e2 = clamp(N_new/E_new - 0.05, 0, 1)
/// computed on the added nodes and edges.
SedgeParams sedge_default_params(std::uint64_t n_new_nodes,
                                 std::uint64_t n_new_edges);

/// Largest edge count of a simple digraph on n nodes.
std::uint64_t simple_capacity(std::uint64_t n_nodes);

/// Starts from n_nodes isolated nodes and inserts n_edges edges. Each edge's
/// source is uniform with probability e1, else drawn by out-degree; its target
/// is uniform over in-degree-0 nodes with probability e2, else drawn by
/// in-degree.
///
/// Throws CapacityError if n_edges exceeds simple_capacity(n_nodes) and
/// ResampleLimitError when resampling is exhausted. Warns when the run leaves
/// the sparse regime or when e2 >= N/E.
Digraph sdg(NodeId n_nodes, std::uint64_t n_edges, const SdgParams& params,
            RandomStream& rng, Warnings* warnings = nullptr);

/// Grows `current` by n_new_nodes isolated nodes, then inserts n_new_edges
/// edges. Per edge: with probability alpha the source comes from all nodes and
/// the target from the new nodes; with probability beta the source comes from
/// the new nodes and the target from all nodes; otherwise both from all nodes.
/// Inside each set the e1/e2 rules of sdg apply. The new nodes get ids
/// [current.node_count(), current.node_count() + n_new_nodes).
///
/// With n_new_nodes == 0 every edge uses the all-nodes branch.
Digraph sedge(const Digraph& current, NodeId n_new_nodes,
              std::uint64_t n_new_edges, const SedgeParams& params,
              RandomStream& rng, Warnings* warnings = nullptr);

/// Grows `seed` (default: one isolated node) until it has target_edges edges.
/// The node count is an outcome of the run.
Digraph bollobas_generate(std::uint64_t target_edges,
                          const BollobasParams& params, RandomStream& rng,
                          const Digraph& seed = Digraph(1));

}  // namespace sdgen
