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

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "sdgen/generators.h"
#include "sdgen/sampling.h"

namespace sdgen {
namespace {

// Node 0 has in-degree 3 and node 1 in-degree 1.
Digraph three_to_one() {
  Digraph g(5);
  g.add_edge(2, 0);
  g.add_edge(3, 0);
  g.add_edge(4, 0);
  g.add_edge(2, 1);
  return g;
}

std::vector<NodeId> ids(NodeId first, NodeId last) {
  std::vector<NodeId> v(last - first);
  std::iota(v.begin(), v.end(), first);
  return v;
}

TEST_CASE("preferential-in draws follow in-degree") {
  const Digraph g = three_to_one();
  const auto candidates = ids(0, 2);
  RandomStream rng(5);
  const int draws = 100000;
  int zero = 0;
  for (int i = 0; i < draws; ++i) {
    zero += sample_node(candidates, SampleMode::kPreferentialIn, g, rng) == 0;
  }
  const double sd = std::sqrt(draws * 0.75 * 0.25);
  CHECK(std::abs(zero - 0.75 * draws) < 3 * sd);
}

TEST_CASE("preferential-out draws follow out-degree") {
  Digraph g(5);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  g.add_edge(0, 4);
  g.add_edge(1, 2);
  const auto candidates = ids(0, 2);
  RandomStream rng(6);
  const int draws = 100000;
  int zero = 0;
  for (int i = 0; i < draws; ++i) {
    zero += sample_node(candidates, SampleMode::kPreferentialOut, g, rng) == 0;
  }
  const double sd = std::sqrt(draws * 0.75 * 0.25);
  CHECK(std::abs(zero - 0.75 * draws) < 3 * sd);
}

TEST_CASE("a single candidate is always returned") {
  const Digraph g = three_to_one();
  const std::vector<NodeId> only = {3};
  RandomStream rng(1);
  for (auto mode : {SampleMode::kUniform, SampleMode::kPreferentialIn,
                    SampleMode::kPreferentialOut, SampleMode::kUniformZeroIn}) {
    CHECK(sample_node(only, mode, g, rng) == 3);
  }
}

TEST_CASE("fallbacks") {
  const Digraph g = three_to_one();
  RandomStream rng(9);
  // Nodes 3 and 4 have no in-edges: preferential-in degrades to uniform.
  const auto sources = ids(3, 5);
  int three = 0;
  for (int i = 0; i < 2000; ++i) {
    three += sample_node(sources, SampleMode::kPreferentialIn, g, rng) == 3;
  }
  CHECK(three > 850);
  CHECK(three < 1150);
  // No in-degree-0 candidate among {0, 1}: zero-in degrades to
  // preferential-in, so node 1 still appears.
  const auto targets = ids(0, 2);
  int one = 0;
  for (int i = 0; i < 4000; ++i) {
    one += sample_node(targets, SampleMode::kUniformZeroIn, g, rng) == 1;
  }
  CHECK(one > 850);
  CHECK(one < 1150);
  // Zero-in over all nodes only ever returns nodes 2, 3 or 4.
  const auto all = ids(0, 5);
  for (int i = 0; i < 1000; ++i) {
    CHECK(g.in_degree(sample_node(all, SampleMode::kUniformZeroIn, g, rng)) ==
          0);
  }
  CHECK_THROWS_AS(
      sample_node(std::vector<NodeId>{}, SampleMode::kUniform, g, rng),
      std::invalid_argument);
}

TEST_CASE("fenwick prefix sums and search") {
  FenwickTree t(6);
  const std::vector<int> w = {2, 0, 3, 1, 0, 4};
  for (std::size_t i = 0; i < w.size(); ++i) t.add(i, w[i]);
  CHECK(t.prefix(0) == 0);
  CHECK(t.prefix(3) == 5);
  CHECK(t.prefix(6) == 10);
  CHECK(t.range({2, 4}) == 4);
  CHECK(t.find(0) == 0);
  CHECK(t.find(1) == 0);
  CHECK(t.find(2) == 2);
  CHECK(t.find(5) == 3);
  CHECK(t.find(6) == 5);
  CHECK(t.find(9) == 5);
}

TEST_CASE("DegreeSampler makes the same draws as sample_node") {
  RandomStream gen_rng(11);
  const Digraph g = sdg(300, 1200, {0.45, 0.1}, gen_rng);
  const DegreeSampler sampler(g);
  const NodeRange ranges[] = {{0, 300}, {40, 170}, {250, 300}, {7, 8}};
  const SampleMode modes[] = {SampleMode::kUniform, SampleMode::kPreferentialIn,
                              SampleMode::kPreferentialOut,
                              SampleMode::kUniformZeroIn};
  for (const NodeRange r : ranges) {
    const auto candidates = ids(r.first, r.last);
    for (const SampleMode mode : modes) {
      RandomStream a(123), b(123);
      for (int i = 0; i < 500; ++i) {
        REQUIRE(sampler.sample(r, mode, a) ==
                sample_node(candidates, mode, g, b));
      }
      CHECK(a.counter() == b.counter());
    }
  }
}

TEST_CASE("DegreeSampler tracks added edges") {
  Digraph g(4);
  DegreeSampler sampler(g);
  g.add_edge(0, 3);
  sampler.on_edge_added(0, 3);
  RandomStream rng(2);
  for (int i = 0; i < 100; ++i) {
    CHECK(sampler.sample({0, 4}, SampleMode::kPreferentialIn, rng) == 3);
    CHECK(sampler.sample({0, 4}, SampleMode::kPreferentialOut, rng) == 0);
    CHECK(sampler.sample({0, 4}, SampleMode::kUniformZeroIn, rng) != 3);
  }
}

}  // namespace
}  // namespace sdgen
