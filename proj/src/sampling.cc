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

#include "sdgen/sampling.h"

#include <bit>
#include <stdexcept>

namespace sdgen {
namespace {

NodeId uniform(std::span<const NodeId> candidates, RandomStream& rng) {
  return candidates[rng.next_below(candidates.size())];
}

NodeId weighted(std::span<const NodeId> candidates, const Digraph& g,
                SampleMode mode, RandomStream& rng) {
  auto weight = [&](NodeId v) -> std::uint64_t {
    return mode == SampleMode::kPreferentialIn ? g.in_degree(v)
                                               : g.out_degree(v);
  };
  std::uint64_t total = 0;
  for (NodeId v : candidates) total += weight(v);
  if (total == 0) return uniform(candidates, rng);
  std::uint64_t target = rng.next_below(total);
  for (NodeId v : candidates) {
    const std::uint64_t w = weight(v);
    if (target < w) return v;
    target -= w;
  }
  throw std::logic_error("weighted sampling ran past the candidate set");
}

}  // namespace

NodeId sample_node(std::span<const NodeId> candidates, SampleMode mode,
                   const Digraph& g, RandomStream& rng) {
  if (candidates.empty()) {
    throw std::invalid_argument("sample_node: empty candidate set");
  }
  switch (mode) {
    case SampleMode::kUniform:
      return uniform(candidates, rng);
    case SampleMode::kPreferentialIn:
    case SampleMode::kPreferentialOut:
      return weighted(candidates, g, mode, rng);
    case SampleMode::kUniformZeroIn: {
      std::vector<NodeId> zeros;
      for (NodeId v : candidates) {
        if (g.in_degree(v) == 0) zeros.push_back(v);
      }
      if (zeros.empty()) {
        return weighted(candidates, g, SampleMode::kPreferentialIn, rng);
      }
      return uniform(zeros, rng);
    }
  }
  throw std::invalid_argument("sample_node: unknown mode");
}

void FenwickTree::add(std::size_t index, std::int64_t delta) {
  for (std::size_t i = index + 1; i < tree_.size(); i += i & (~i + 1)) {
    tree_[i] += static_cast<std::uint64_t>(delta);
  }
}

std::uint64_t FenwickTree::prefix(std::size_t end) const {
  std::uint64_t sum = 0;
  for (std::size_t i = end; i > 0; i -= i & (~i + 1)) sum += tree_[i];
  return sum;
}

std::size_t FenwickTree::find(std::uint64_t target) const {
  std::size_t pos = 0;
  for (std::size_t step = std::bit_floor(size()); step > 0; step >>= 1) {
    if (pos + step < tree_.size() && tree_[pos + step] <= target) {
      pos += step;
      target -= tree_[pos];
    }
  }
  return pos;
}

DegreeSampler::DegreeSampler(const Digraph& g)
    : in_(g.node_count()),
      out_(g.node_count()),
      zero_in_(g.node_count()),
      in_degree_(g.node_count()) {
  for (NodeId v = 0; v < g.node_count(); ++v) {
    in_degree_[v] = g.in_degree(v);
    in_.add(v, g.in_degree(v));
    out_.add(v, g.out_degree(v));
    if (g.in_degree(v) == 0) zero_in_.add(v, 1);
  }
}

void DegreeSampler::on_edge_added(NodeId src, NodeId dst) {
  out_.add(src, 1);
  in_.add(dst, 1);
  if (in_degree_[dst]++ == 0) zero_in_.add(dst, -1);
}

NodeId DegreeSampler::weighted(const FenwickTree& weights,
                               NodeRange candidates, RandomStream& rng) const {
  const std::uint64_t total = weights.range(candidates);
  if (total == 0) {
    return candidates.first +
           static_cast<NodeId>(rng.next_below(candidates.size()));
  }
  const std::uint64_t target =
      weights.prefix(candidates.first) + rng.next_below(total);
  return static_cast<NodeId>(weights.find(target));
}

NodeId DegreeSampler::sample(NodeRange candidates, SampleMode mode,
                             RandomStream& rng) const {
  if (candidates.empty() || candidates.last > node_count()) {
    throw std::invalid_argument("DegreeSampler: bad candidate range");
  }
  switch (mode) {
    case SampleMode::kUniform:
      return candidates.first +
             static_cast<NodeId>(rng.next_below(candidates.size()));
    case SampleMode::kPreferentialIn:
      return weighted(in_, candidates, rng);
    case SampleMode::kPreferentialOut:
      return weighted(out_, candidates, rng);
    case SampleMode::kUniformZeroIn: {
      const std::uint64_t zeros = zero_in_.range(candidates);
      if (zeros == 0) return weighted(in_, candidates, rng);
      const std::uint64_t target =
          zero_in_.prefix(candidates.first) + rng.next_below(zeros);
      return static_cast<NodeId>(zero_in_.find(target));
    }
  }
  throw std::invalid_argument("DegreeSampler: unknown mode");
}

}  // namespace sdgen
