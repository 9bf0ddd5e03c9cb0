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

#include <cstdint>
#include <span>
#include <vector>

#include "sdgen/digraph.h"
#include "sdgen/random.h"

namespace sdgen {

enum class SampleMode {
  kUniform,
  kPreferentialIn,   // weight = in-degree
  kPreferentialOut,  // weight = out-degree
  kUniformZeroIn,    // uniform over candidates with in-degree 0
};

/// Draws one node from `candidates` (in the given order).
///
/// Preferential modes fall back to uniform when every candidate has weight 0.
/// kUniformZeroIn falls back to kPreferentialIn when no candidate has
/// in-degree 0. Linear in the candidate count; the generators use
/// DegreeSampler instead, which makes the same draws for contiguous ranges.
/// Throws std::invalid_argument for an empty candidate set.
NodeId sample_node(std::span<const NodeId> candidates, SampleMode mode,
                   const Digraph& g, RandomStream& rng);

/// Half-open range of node ids [first, last).
struct NodeRange {
  NodeId first = 0;
  NodeId last = 0;

  NodeId size() const { return last - first; }
  bool empty() const { return first >= last; }
};

/// Prefix-sum tree over non-negative integer weights.
class FenwickTree {
 public:
  explicit FenwickTree(std::size_t size = 0) : tree_(size + 1, 0) {}

  std::size_t size() const { return tree_.size() - 1; }
  void add(std::size_t index, std::int64_t delta);
  /// Sum of weights [0, end).
  std::uint64_t prefix(std::size_t end) const;
  std::uint64_t range(NodeRange r) const {
    return prefix(r.last) - prefix(r.first);
  }
  /// Smallest index i with prefix(i + 1) > target. Requires target < total.
  std::size_t find(std::uint64_t target) const;

 private:
  std::vector<std::uint64_t> tree_;
};

/// Degree-weighted node selection over id ranges in O(log N) per draw.
///
/// Mirrors the in- and out-degrees of a graph; call on_edge_added after every
/// successful insertion. For a range, `sample` consumes randomness exactly
/// like sample_node on the same ids in ascending order.
class DegreeSampler {
 public:
  explicit DegreeSampler(const Digraph& g);

  NodeId node_count() const { return static_cast<NodeId>(in_.size()); }
  void on_edge_added(NodeId src, NodeId dst);
  NodeId sample(NodeRange candidates, SampleMode mode, RandomStream& rng) const;

 private:
  NodeId weighted(const FenwickTree& weights, NodeRange candidates,
                  RandomStream& rng) const;

  FenwickTree in_;
  FenwickTree out_;
  FenwickTree zero_in_;  // 1 where in-degree == 0
  std::vector<std::uint32_t> in_degree_;
};

}  // namespace sdgen
