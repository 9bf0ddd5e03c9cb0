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

#include "sdgen/digraph.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sdgen {

Digraph::Digraph(NodeId node_count) : out_(node_count), in_(node_count) {}

AddResult Digraph::add_edge(NodeId src, NodeId dst) {
  if (src >= node_count() || dst >= node_count()) {
    throw std::out_of_range("edge (" + std::to_string(src) + ", " +
                            std::to_string(dst) + ") outside node range [0, " +
                            std::to_string(node_count()) + ")");
  }
  if (src == dst) return AddResult::kSelfLoop;
  if (!keys_.insert(key(src, dst)).second) return AddResult::kDuplicate;
  out_[src].push_back(dst);
  in_[dst].push_back(src);
  edges_.push_back({src, dst});
  return AddResult::kAdded;
}

bool Digraph::has_edge(NodeId src, NodeId dst) const {
  return keys_.contains(key(src, dst));
}

NodeId Digraph::add_nodes(NodeId count) {
  const NodeId first = node_count();
  out_.resize(out_.size() + count);
  in_.resize(in_.size() + count);
  return first;
}

std::vector<Edge> Digraph::sorted_edges() const {
  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

bool operator==(const Digraph& a, const Digraph& b) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) {
    return false;
  }
  return std::all_of(a.edges_.begin(), a.edges_.end(), [&](const Edge& e) {
    return b.has_edge(e.src, e.dst);
  });
}

const char* to_string(DegreeKind kind) {
  return kind == DegreeKind::kIn ? "in" : "out";
}

DegreeSequence degree_sequence(const Digraph& g, DegreeKind kind) {
  DegreeSequence seq{kind, std::vector<std::uint32_t>(g.node_count(), 0)};
  for (const Edge& e : g.edges()) {
    ++seq.values[kind == DegreeKind::kIn ? e.dst : e.src];
  }
  return seq;
}

std::vector<NodeId> weak_components(const Digraph& g, NodeId* count) {
  constexpr NodeId kUnset = ~NodeId{0};
  std::vector<NodeId> label(g.node_count(), kUnset);
  NodeId next = 0;
  std::vector<NodeId> stack;
  for (NodeId root = 0; root < g.node_count(); ++root) {
    if (label[root] != kUnset) continue;
    label[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (auto nbrs : {g.successors(v), g.predecessors(v)}) {
        for (NodeId w : nbrs) {
          if (label[w] == kUnset) {
            label[w] = next;
            stack.push_back(w);
          }
        }
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return label;
}

std::vector<NodeId> strong_components(const Digraph& g, NodeId* count) {
  // Iterative Tarjan.
  constexpr NodeId kUnset = ~NodeId{0};
  const NodeId n = g.node_count();
  std::vector<NodeId> index(n, kUnset), low(n, 0), label(n, kUnset);
  std::vector<NodeId> stack;
  std::vector<bool> on_stack(n, false);
  struct Frame {
    NodeId v;
    std::size_t next;
  };
  std::vector<Frame> calls;
  NodeId counter = 0;
  NodeId components = 0;

  for (NodeId root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    calls.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!calls.empty()) {
      Frame& frame = calls.back();
      const NodeId v = frame.v;
      const auto succ = g.successors(v);
      if (frame.next < succ.size()) {
        const NodeId w = succ[frame.next++];
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          calls.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        NodeId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          label[w] = components;
        } while (w != v);
        ++components;
      }
      calls.pop_back();
      if (!calls.empty()) {
        const NodeId parent = calls.back().v;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  if (count != nullptr) *count = components;
  return label;
}

namespace {

// Eccentricity of `source` in the undirected projection.
std::uint32_t eccentricity(const Digraph& g, NodeId source,
                           std::vector<std::uint32_t>& dist,
                           std::vector<NodeId>& queue) {
  constexpr std::uint32_t kUnreached = ~std::uint32_t{0};
  std::fill(dist.begin(), dist.end(), kUnreached);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  std::uint32_t far = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    far = dist[v];
    for (auto nbrs : {g.successors(v), g.predecessors(v)}) {
      for (NodeId w : nbrs) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return far;
}

}  // namespace

GraphStats graph_stats(const Digraph& g) {
  if (g.node_count() == 0) {
    throw std::invalid_argument("graph_stats requires at least one node");
  }
  GraphStats stats;
  stats.node_count = g.node_count();
  stats.edge_count = g.edge_count();
  const std::uint64_t divisor = std::gcd<std::uint64_t, std::uint64_t>(
      stats.edge_count, stats.node_count);
  stats.edges_per_node = {stats.edge_count / divisor,
                          stats.node_count / divisor};

  NodeId n_components = 0;
  const std::vector<NodeId> label = weak_components(g, &n_components);
  std::vector<std::size_t> sizes(n_components, 0);
  for (NodeId l : label) ++sizes[l];
  // Ties go to the component with the smallest node id (lowest label).
  const NodeId largest = static_cast<NodeId>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

  std::vector<std::uint32_t> dist(g.node_count());
  std::vector<NodeId> queue;
  queue.reserve(g.node_count());
  std::uint32_t diameter = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (label[v] == largest) {
      diameter = std::max(diameter, eccentricity(g, v, dist, queue));
    }
  }
  stats.largest_component_diameter = diameter;
  stats.weakly_connected = n_components == 1;
  if (stats.weakly_connected) stats.diameter = diameter;
  return stats;
}

}  // namespace sdgen
