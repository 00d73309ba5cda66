// Copyright 2026 The protodef Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "protodef/devgraph.hpp"
#include "test_util.hpp"

using namespace protodef;
using testing_util::ng;

namespace {

using Edges = std::vector<DevGraph::Edge>;

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("deviation-graph") {

TEST_CASE("naive game graph") {
  const DevGraph g = DevGraph::build(ng());
  CHECK(g.edges() == Edges{{0, 1}, {0, 2}, {1, 2}});
  CHECK(g.parallel_evidence() == std::vector<std::size_t>{1, 1, 1});
  CHECK(g.self_loops() == OutcomeSet(3, {0}));
  CHECK(g.hyperedges().size() == 3);
}

TEST_CASE("injective square is a 4-cycle") {
  const DevGraph g = DevGraph::build(GameFrame::injective({2, 2}));
  CHECK(g.edges() == Edges{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(g.self_loops().empty());
  CHECK_FALSE(acyclic_component_exists(g));
}

TEST_CASE("single agent gives a complete graph") {
  const DevGraph g = DevGraph::build(GameFrame::injective({4}));
  CHECK(g.edges().size() == 6);
  CHECK(g.hyperedges().size() == 1);
  CHECK_FALSE(acyclic_component_exists(g));
  CHECK(knot_free_component_exists(g));
}

TEST_CASE("parallel evidence is counted, not duplicated") {
  // Both of agent 0's lines read (w0, w1).
  const DevGraph g = DevGraph::build(GameFrame::from_table({2, 2}, {0, 0, 1, 1}));
  CHECK(g.edges() == Edges{{0, 1}});
  CHECK(g.parallel_evidence() == std::vector<std::size_t>{2});
  CHECK(g.self_loops() == OutcomeSet(2, {0, 1}));
  CHECK(g.hyperedges().size() == 1);
  CHECK(acyclic_component_exists(g));
  CHECK(knot_free_component_exists(g));
}

TEST_CASE("neighborhood") {
  const DevGraph g = DevGraph::build(ng());
  CHECK(neighborhood(g, OutcomeSet(3, {2})) == OutcomeSet::full(3));
  CHECK(neighborhood(g, OutcomeSet(3)).empty());
  CHECK(neighborhood(g, OutcomeSet::full(3)).is_full());
  const DevGraph sq = DevGraph::build(GameFrame::injective({2, 2}));
  CHECK(neighborhood(sq, OutcomeSet(4, {0})) == OutcomeSet(4, {0, 1, 2}));
}

TEST_CASE("restriction") {
  const DevGraph g = DevGraph::build(ng());
  const DevGraph r = g.restrict(OutcomeSet(3, {0, 2}));
  CHECK(r.vertices() == OutcomeSet(3, {0, 2}));
  CHECK(r.edges() == Edges{{0, 2}});
  CHECK(r.self_loops() == OutcomeSet(3, {0}));
  CHECK(acyclic_component_exists(r));
  const DevGraph one = g.restrict(OutcomeSet(3, {1}));
  CHECK(one.edges().empty());
  CHECK(acyclic_component_exists(one));
  const DevGraph all = g.restrict(OutcomeSet::full(3));
  CHECK(all.edges() == g.edges());
  CHECK(all.hyperedges() == g.hyperedges());
}

TEST_CASE("acyclic components") {
  const DevGraph g = DevGraph::build(ng());
  CHECK(acyclic_component_exists(g.restrict(OutcomeSet(3, {0, 1}))));
  CHECK_FALSE(acyclic_component_exists(g));
  // Agent 0's line through (*,0,0) is a triangle; (0,1,1) touches none of it.
  const DevGraph h = DevGraph::build(GameFrame::injective({3, 2, 2}));
  const DevGraph tri = h.restrict(OutcomeSet(12, {0, 4, 8}));
  CHECK_FALSE(acyclic_component_exists(tri));
  const DevGraph plus = h.restrict(OutcomeSet(12, {0, 3, 4, 8}));
  CHECK(components(plus).size() == 2);
  CHECK(acyclic_component_exists(plus));
}

TEST_CASE("a line of three outcomes is a triangle but not a knot") {
  const DevGraph g = DevGraph::build(GameFrame::injective({2, 3}));
  const DevGraph row = g.restrict(OutcomeSet(6, {0, 1, 2}));
  CHECK(row.edges().size() == 3);
  CHECK_FALSE(acyclic_component_exists(row));
  CHECK(knot_free_component_exists(row));
  const DevGraph square = g.restrict(OutcomeSet(6, {0, 1, 3, 4}));
  CHECK_FALSE(knot_free_component_exists(square));
}

TEST_CASE("DOT output") {
  const DevGraph g = DevGraph::build(ng());
  const std::string dot = to_dot(g, OutcomeSet(3, {0, 2}));
  CHECK(dot == to_dot(g, OutcomeSet(3, {0, 2})));
  CHECK(count(dot, "[label=") == 3);
  CHECK(count(dot, "doublecircle") == 2);
  CHECK(count(dot, "style=dashed") == 1);
  CHECK(count(dot, " -- ") == 4);
  CHECK(count(to_dot(g, OutcomeSet(3)), "doublecircle") == 0);
  CHECK(dot.rfind("graph dev {", 0) == 0);
}

TEST_CASE("acyclic_component_exists agrees with a DFS cycle finder") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 300; ++round) {
    const std::size_t a = 1 + rng() % 3, b = 1 + rng() % 3;
    const std::size_t m = 1 + rng() % (a * b);
    std::vector<OutcomeId> map(a * b);
    for (std::size_t p = 0; p < map.size(); ++p) map[p] = p < m ? p : rng() % m;
    const GameFrame f = GameFrame::from_table({a, b}, map);
    const DevGraph g = DevGraph::build(f);
    std::vector<std::size_t> keep;
    for (std::size_t w = 0; w < f.num_outcomes(); ++w) {
      if (rng() % 2) keep.push_back(w);
    }
    const DevGraph r = g.restrict(OutcomeSet::of(f.num_outcomes(), keep));
    CHECK(acyclic_component_exists(r) ==
          oracle::has_tree_component(r.vertices().members(), r.edges(), f.num_outcomes()));
  }
}

}  // TEST_SUITE
