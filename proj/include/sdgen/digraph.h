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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

namespace sdgen {

using NodeId = std::uint32_t;

struct Edge {
  NodeId src;
  NodeId dst;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Outcome of an edge insertion. Rejections are not errors: generators
/// propose self-loops and duplicates routinely and resample them.
enum class AddResult { kAdded, kSelfLoop, kDuplicate };

/// Simple directed graph over dense node ids 0..node_count()-1.
///
/// No self-loops, no parallel edges. The node count is stored independently
/// of the edges, so isolated nodes survive. Edges are kept in insertion order;
/// equality compares node count and edge *sets*.
class Digraph {
 public:
  explicit Digraph(NodeId node_count = 0);

  NodeId node_count() const { return static_cast<NodeId>(out_.size()); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Throws std::out_of_range when either endpoint is not a node.
  AddResult add_edge(NodeId src, NodeId dst);
  bool has_edge(NodeId src, NodeId dst) const;

  /// Appends `count` isolated nodes and returns the id of the first one.
  NodeId add_nodes(NodeId count);

  std::span<const NodeId> successors(NodeId v) const { return out_.at(v); }
  std::span<const NodeId> predecessors(NodeId v) const { return in_.at(v); }
  std::uint32_t out_degree(NodeId v) const {
    return static_cast<std::uint32_t>(out_.at(v).size());
  }
  std::uint32_t in_degree(NodeId v) const {
    return static_cast<std::uint32_t>(in_.at(v).size());
  }

  /// Edges in insertion order.
  const std::vector<Edge>& edges() const { return edges_; }
  /// Edges ordered by (src, dst); the canonical order used for output.
  std::vector<Edge> sorted_edges() const;

  friend bool operator==(const Digraph& a, const Digraph& b);

 private:
  static std::uint64_t key(NodeId src, NodeId dst) {
    return (static_cast<std::uint64_t>(src) << 32) | dst;
  }

  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
  std::vector<Edge> edges_;
  std::unordered_set<std::uint64_t> keys_;
};

enum class DegreeKind { kIn, kOut };

const char* to_string(DegreeKind kind);

struct DegreeSequence {
  DegreeKind kind = DegreeKind::kIn;
  /// One entry per node, in node-id order (or in the order of a node subset).
  std::vector<std::uint32_t> values;
};

DegreeSequence degree_sequence(const Digraph& g, DegreeKind kind);

/// Exact non-negative fraction, kept in lowest terms.
struct Ratio {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  double value() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

struct GraphStats {
  NodeId node_count = 0;
  std::size_t edge_count = 0;
  Ratio edges_per_node;
  /// Longest shortest path with edge directions ignored. Empty when the
  /// graph is not weakly connected.
  std::optional<std::uint32_t> diameter;
  /// Same measure restricted to the largest weak component; always defined.
  std::uint32_t largest_component_diameter = 0;
  bool weakly_connected = false;
};

/// Requires node_count() >= 1. Diameter costs one BFS per node of the
/// largest weak component.
GraphStats graph_stats(const Digraph& g);

/// Weak component label per node; labels are dense and ordered by the
/// smallest node id in each component.
std::vector<NodeId> weak_components(const Digraph& g, NodeId* count = nullptr);

/// Strongly connected component label per node. Labels are numbered in
/// reverse topological order of the condensation: every edge u->v between
/// different components has label[u] > label[v].
std::vector<NodeId> strong_components(const Digraph& g,
                                      NodeId* count = nullptr);

}  // namespace sdgen
