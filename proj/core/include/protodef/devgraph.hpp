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

#ifndef PROTODEF_DEVGRAPH_HPP_
#define PROTODEF_DEVGRAPH_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "protodef/game.hpp"
#include "protodef/index_set.hpp"

namespace protodef {

// Undirected simple graph on outcomes. An edge joins two distinct outcomes
// produced by profiles that differ in one agent's strategy.
//
// Besides the simple graph the structure keeps, for every agent and every
// "line" (the profiles that agree outside that agent's coordinate), the set
// of distinct outcomes on the line. These hyperedges carry the information
// the simple graph loses: all outcomes on a line are pairwise adjacent
// through the same agent.
class DevGraph {
 public:
  using Edge = std::pair<OutcomeId, OutcomeId>;  // first < second

  DevGraph() = default;

  static DevGraph build(const GameFrame& frame);

  std::size_t num_vertices() const { return vertices_.universe(); }
  const OutcomeSet& vertices() const { return vertices_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Sorted by (first, second).
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& parallel_evidence() const {
    return evidence_;
  }
  const OutcomeSet& self_loops() const { return self_loops_; }
  bool has_edge(OutcomeId a, OutcomeId b) const;

  // Distinct outcome sets with at least two members, sorted.
  const std::vector<OutcomeSet>& hyperedges() const { return hyperedges_; }

  // Induced subgraph on the members of `keep`. Vertex ids are unchanged;
  // vertices outside `keep` are absent. Hyperedges are intersected with
  // `keep` and kept when two or more members remain.
  DevGraph restrict(const OutcomeSet& keep) const;

  std::vector<std::vector<OutcomeId>> adjacency() const;

 private:
  OutcomeSet vertices_;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> evidence_;
  OutcomeSet self_loops_;
  std::vector<OutcomeSet> hyperedges_;
};

// V together with every vertex adjacent to V.
OutcomeSet neighborhood(const DevGraph& g, const OutcomeSet& v);

// Connected components of the simple graph, each ascending, ordered by
// smallest member.
std::vector<std::vector<OutcomeId>> components(const DevGraph& g);

// Some connected component is a tree in the simple graph (self-loops and
// parallel evidence ignored). An isolated vertex counts.
bool acyclic_component_exists(const DevGraph& g);

// Some connected component of the line hypergraph is Berge-acyclic: no
// cycle alternates between distinct vertices and distinct hyperedges. Three
// outcomes on one line are a triangle in the simple graph but a single
// hyperedge here, so they do not form a knot.
bool knot_free_component_exists(const DevGraph& g);

std::string to_dot(const DevGraph& g, const OutcomeSet& highlight);

}  // namespace protodef

#endif  // PROTODEF_DEVGRAPH_HPP_
