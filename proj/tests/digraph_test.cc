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

#include <stdexcept>

#include "sdgen/digraph.h"

namespace sdgen {
namespace {

Digraph path_graph(NodeId n) {
  Digraph g(n);
  for (NodeId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

TEST_CASE("add_edge rejects self-loops and duplicates") {
  Digraph g(3);
  CHECK(g.add_edge(0, 1) == AddResult::kAdded);
  CHECK(g.add_edge(0, 1) == AddResult::kDuplicate);
  CHECK(g.add_edge(2, 2) == AddResult::kSelfLoop);
  CHECK(g.add_edge(1, 0) == AddResult::kAdded);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(1, 2));
  CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
}

TEST_CASE("degrees and adjacency") {
  Digraph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(3, 2);
  CHECK(g.out_degree(0) == 2);
  CHECK(g.in_degree(2) == 2);
  CHECK(g.in_degree(0) == 0);
  CHECK(g.successors(0).size() == 2);
  CHECK(g.predecessors(2).size() == 2);
  const auto in = degree_sequence(g, DegreeKind::kIn);
  CHECK(in.values == std::vector<std::uint32_t>{0, 1, 2, 0});
  const auto out = degree_sequence(g, DegreeKind::kOut);
  CHECK(out.values == std::vector<std::uint32_t>{2, 0, 0, 1});
}

TEST_CASE("add_nodes appends isolated nodes") {
  Digraph g(2);
  CHECK(g.add_nodes(3) == 2);
  CHECK(g.node_count() == 5);
  CHECK(g.add_edge(4, 0) == AddResult::kAdded);
}

TEST_CASE("equality ignores insertion order") {
  Digraph a(3), b(3);
  a.add_edge(0, 1);
  a.add_edge(1, 2);
  b.add_edge(1, 2);
  b.add_edge(0, 1);
  CHECK(a == b);
  b.add_edge(2, 0);
  CHECK_FALSE(a == b);
  CHECK_FALSE(Digraph(3) == Digraph(4));
}

TEST_CASE("graph_stats on a connected path") {
  const GraphStats s = graph_stats(path_graph(5));
  CHECK(s.node_count == 5);
  CHECK(s.edge_count == 4);
  CHECK(s.edges_per_node == Ratio{4, 5});
  CHECK(s.edges_per_node.value() == doctest::Approx(0.8));
  REQUIRE(s.diameter);
  CHECK(*s.diameter == 4);
  CHECK(s.largest_component_diameter == 4);
  CHECK(s.weakly_connected);
}

TEST_CASE("graph_stats on a disconnected graph") {
  Digraph g(6);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  g.add_edge(2, 3);
  g.add_edge(4, 5);
  const GraphStats s = graph_stats(g);
  CHECK_FALSE(s.weakly_connected);
  CHECK_FALSE(s.diameter);
  CHECK(s.largest_component_diameter == 3);
  CHECK_THROWS_AS(graph_stats(Digraph(0)), std::invalid_argument);
}

TEST_CASE("strong components of a cycle plus a tail") {
  Digraph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  NodeId count = 0;
  const auto comp = strong_components(g, &count);
  CHECK(count == 3);
  CHECK(comp[0] == comp[1]);
  CHECK(comp[1] == comp[2]);
  CHECK(comp[3] != comp[0]);
  CHECK(comp[4] != comp[3]);
  NodeId weak = 0;
  weak_components(g, &weak);
  CHECK(weak == 1);
}

}  // namespace
}  // namespace sdgen
