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

#include "protodef/devgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace protodef {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

void sort_unique(std::vector<OutcomeSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

DevGraph DevGraph::build(const GameFrame& frame) {
  const std::size_t m = frame.num_outcomes();
  DevGraph g;
  g.vertices_ = OutcomeSet::full(m);
  g.labels_ = frame.outcome_names();
  g.self_loops_ = OutcomeSet(m);
  std::map<Edge, std::size_t> count;
  for (std::size_t i = 0; i < frame.num_agents(); ++i) {
    const std::size_t st = frame.stride(i);
    const std::size_t n = frame.num_strategies(i);
    for (ProfileIndex first = 0; first < frame.num_profiles(); ++first) {
      if (frame.strategy_at(first, i) != 0) continue;
      OutcomeSet line(m);
      for (std::size_t k = 0; k < n; ++k) {
        const OutcomeId a = frame.outcome_at(first + k * st);
        line.insert(a);
        for (std::size_t l = k + 1; l < n; ++l) {
          const OutcomeId b = frame.outcome_at(first + l * st);
          if (a == b) {
            g.self_loops_.insert(a);
          } else {
            ++count[{std::min(a, b), std::max(a, b)}];
          }
        }
      }
      if (line.size() >= 2) g.hyperedges_.push_back(std::move(line));
    }
  }
  for (const auto& [e, c] : count) {
    g.edges_.push_back(e);
    g.evidence_.push_back(c);
  }
  sort_unique(g.hyperedges_);
  return g;
}

bool DevGraph::has_edge(OutcomeId a, OutcomeId b) const {
  const Edge e{std::min(a, b), std::max(a, b)};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

DevGraph DevGraph::restrict(const OutcomeSet& keep) const {
  DevGraph g;
  g.vertices_ = OutcomeSet(num_vertices());
  for (OutcomeId w : vertices_.members()) {
    if (keep.contains(w)) g.vertices_.insert(w);
  }
  g.labels_ = labels_;
  g.self_loops_ = OutcomeSet(num_vertices());
  for (OutcomeId w : self_loops_.members()) {
    if (g.vertices_.contains(w)) g.self_loops_.insert(w);
  }
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (g.vertices_.contains(edges_[k].first) &&
        g.vertices_.contains(edges_[k].second)) {
      g.edges_.push_back(edges_[k]);
      g.evidence_.push_back(evidence_[k]);
    }
  }
  for (const auto& h : hyperedges_) {
    OutcomeSet cut(num_vertices());
    for (OutcomeId w : h.members()) {
      if (g.vertices_.contains(w)) cut.insert(w);
    }
    if (cut.size() >= 2) g.hyperedges_.push_back(std::move(cut));
  }
  sort_unique(g.hyperedges_);
  return g;
}

std::vector<std::vector<OutcomeId>> DevGraph::adjacency() const {
  std::vector<std::vector<OutcomeId>> adj(num_vertices());
  for (const auto& [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

OutcomeSet neighborhood(const DevGraph& g, const OutcomeSet& v) {
  OutcomeSet out = v;
  for (const auto& [a, b] : g.edges()) {
    if (v.contains(a)) out.insert(b);
    if (v.contains(b)) out.insert(a);
  }
  return out;
}

std::vector<std::vector<OutcomeId>> components(const DevGraph& g) {
  UnionFind uf(g.num_vertices());
  for (const auto& [a, b] : g.edges()) uf.unite(a, b);
  std::map<std::size_t, std::vector<OutcomeId>> groups;
  for (OutcomeId w : g.vertices().members()) groups[uf.find(w)].push_back(w);
  std::vector<std::vector<OutcomeId>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

bool acyclic_component_exists(const DevGraph& g) {
  UnionFind uf(g.num_vertices());
  for (const auto& [a, b] : g.edges()) uf.unite(a, b);
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> tally;  // V, E
  for (OutcomeId w : g.vertices().members()) ++tally[uf.find(w)].first;
  for (const auto& e : g.edges()) ++tally[uf.find(e.first)].second;
  return std::any_of(tally.begin(), tally.end(), [](const auto& kv) {
    return kv.second.second + 1 == kv.second.first;
  });
}

bool knot_free_component_exists(const DevGraph& g) {
  // Incidence graph: outcome vertices, then one node per hyperedge.
  const std::size_t nv = g.num_vertices();
  const auto& hs = g.hyperedges();
  UnionFind uf(nv + hs.size());
  for (std::size_t k = 0; k < hs.size(); ++k) {
    for (OutcomeId w : hs[k].members()) uf.unite(w, nv + k);
  }
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> tally;  // nodes, incidences
  for (OutcomeId w : g.vertices().members()) ++tally[uf.find(w)].first;
  for (std::size_t k = 0; k < hs.size(); ++k) {
    auto& t = tally[uf.find(nv + k)];
    ++t.first;
    t.second += hs[k].size();
  }
  return std::any_of(tally.begin(), tally.end(), [](const auto& kv) {
    return kv.second.second + 1 == kv.second.first;
  });
}

std::string to_dot(const DevGraph& g, const OutcomeSet& highlight) {
  std::ostringstream out;
  out << "graph dev {\n";
  for (OutcomeId w : g.vertices().members()) {
    out << "  n" << w << " [label=" << quoted(g.labels()[w]);
    if (highlight.contains(w)) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (const auto& [a, b] : g.edges()) out << "  n" << a << " -- n" << b << ";\n";
  for (OutcomeId w : g.self_loops().members()) {
    out << "  n" << w << " -- n" << w << " [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace protodef
