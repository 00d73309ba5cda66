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

#ifndef PROTODEF_TESTS_PROPERTIES_HPP_
#define PROTODEF_TESTS_PROPERTIES_HPP_

// Randomized invariants shared by the property suite and the acceptance
// binary. Each runner draws its own cases from a fixed seed and records
// failures instead of asserting.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "protodef/defend.hpp"
#include "protodef/devgraph.hpp"
#include "protodef/protocol.hpp"
#include "protodef/solution.hpp"

namespace properties {

using namespace protodef;

struct Run {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first_failure = what + " (case " + std::to_string(cases) + ")";
  }
};

inline constexpr SolutionConceptId kAllConcepts[] = {
    SolutionConceptId::kNE, SolutionConceptId::kOptNE, SolutionConceptId::kUndom,
    SolutionConceptId::kPO};

inline std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Surjective random frame; `max_outcomes` caps |Omega|.
inline GameFrame random_frame(std::mt19937_64& rng, std::size_t max_agents,
                              std::size_t max_strategies, std::size_t max_outcomes) {
  std::vector<std::size_t> counts(pick(rng, 1, max_agents));
  std::size_t total = 1;
  for (auto& c : counts) {
    c = pick(rng, 1, max_strategies);
    total *= c;
  }
  const std::size_t m = pick(rng, 1, std::min(total, max_outcomes));
  std::vector<OutcomeId> map(total);
  for (std::size_t p = 0; p < total; ++p) map[p] = p < m ? p : pick(rng, 0, m - 1);
  std::shuffle(map.begin(), map.end(), rng);
  return GameFrame::from_table(counts, map);
}

inline UtilityProfile random_ordinal(std::mt19937_64& rng, std::size_t agents,
                                     std::size_t m) {
  std::vector<WeakOrder> orders;
  for (std::size_t i = 0; i < agents; ++i) {
    std::vector<long long> scores(m);
    for (auto& s : scores) s = static_cast<long long>(pick(rng, 0, m));
    orders.push_back(WeakOrder::from_scores(scores));
  }
  return UtilityProfile::ordinal(orders);
}

inline Objective random_goal(std::mt19937_64& rng, std::size_t m) {
  Objective g(m);
  for (std::size_t w = 0; w < m; ++w) {
    if (rng() % 2) g.insert(w);
  }
  return g;
}

inline DefenderSet random_defenders(std::mt19937_64& rng, std::size_t n) {
  DefenderSet d(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng() % 2) d.insert(i);
  }
  return d;
}

// Random tree source with owners P0..P<agents-1> and labels from a pool.
inline std::string random_tree(std::mt19937_64& rng, std::size_t agents, int depth) {
  if (depth == 0 || rng() % 4 == 0) {
    return "(outcome o" + std::to_string(pick(rng, 0, 4)) + ")";
  }
  std::string s = "(node P" + std::to_string(pick(rng, 0, agents - 1));
  const std::size_t actions = pick(rng, 1, 3);
  for (std::size_t a = 0; a < actions; ++a) {
    s += " (a" + std::to_string(a) + " " + random_tree(rng, agents, depth - 1) + ")";
  }
  return s + ")";
}

// s is an equilibrium iff pi(s) is one in the relabelled game.
inline Run permutation_closure(int n, std::uint64_t seed = 1) {
  Run r{"NE permutation closure"};
  std::mt19937_64 rng(seed);
  for (; r.cases < n; ++r.cases) {
    const GameFrame f = random_frame(rng, 3, 3, 27);
    const auto u = random_ordinal(rng, f.num_agents(), f.num_outcomes());
    PermutationProfile pi(f.num_agents());
    for (std::size_t i = 0; i < pi.size(); ++i) {
      pi[i].resize(f.num_strategies(i));
      std::iota(pi[i].begin(), pi[i].end(), std::size_t{0});
      std::shuffle(pi[i].begin(), pi[i].end(), rng);
    }
    const auto permuted = permute(f, u, pi);
    const auto before = pure_nash(f, u);
    const auto after = pure_nash(permuted.frame, permuted.utilities);
    r.expect(before.size() == after.size(), "equilibrium count changed");
    for (ProfileIndex p = 0; p < f.num_profiles(); ++p) {
      const ProfileIndex q =
          permuted.frame.index_of(apply_permutation(pi, f.profile_at(p)));
      r.expect(before.contains(p) == after.contains(q), "membership changed");
    }
  }
  return r;
}

// D subset of D' and D defends goal imply D' defends goal; the empty set
// defends exactly the valid objectives.
inline Run defender_monotonicity(int n, std::uint64_t seed = 2) {
  Run r{"defendability monotone in D"};
  std::mt19937_64 rng(seed);
  for (; r.cases < n; ++r.cases) {
    const GameFrame f = random_frame(rng, 2, 3, 4);
    const Objective goal = random_goal(rng, f.num_outcomes());
    const DefenderSet small = random_defenders(rng, f.num_agents());
    DefenderSet large = small;
    for (std::size_t i = 0; i < f.num_agents(); ++i) {
      if (rng() % 2) large.insert(i);
    }
    const auto sc = kAllConcepts[rng() % 4];
    const bool a = defendable_oracle(f, goal, small, sc).holds;
    const bool b = defendable_oracle(f, goal, large, sc).holds;
    r.expect(!a || b, "larger defender set lost defendability");
    if (small.empty()) r.expect(a == valid(f, goal, sc).holds, "validity mismatch");
  }
  return r;
}

// Every pure concept depends only on the ordinal content of utilities.
inline Run ordinal_invariance(int n, std::uint64_t seed = 3) {
  Run r{"ordinal-transform invariance"};
  std::mt19937_64 rng(seed);
  for (; r.cases < n; ++r.cases) {
    const GameFrame f = random_frame(rng, 3, 3, 8);
    const std::size_t m = f.num_outcomes();
    std::vector<CardinalUtility> base(f.num_agents()), moved(f.num_agents());
    std::vector<WeakOrder> ranks;
    for (std::size_t i = 0; i < f.num_agents(); ++i) {
      std::vector<long long> scores(m);
      for (auto& s : scores) s = static_cast<long long>(pick(rng, 0, 6)) - 3;
      // A random strictly increasing map on -3..3.
      std::vector<long long> steps(7);
      long long acc = static_cast<long long>(pick(rng, 0, 50)) - 25;
      for (auto& v : steps) v = acc += static_cast<long long>(pick(rng, 1, 9));
      for (std::size_t w = 0; w < m; ++w) {
        base[i].push_back(Rational(scores[w]));
        moved[i].push_back(Rational(steps[scores[w] + 3]) / 7);
      }
      ranks.push_back(WeakOrder::from_scores(scores));
    }
    const auto u = UtilityProfile::cardinal(base);
    const auto v = UtilityProfile::cardinal(moved);
    const auto o = UtilityProfile::ordinal(ranks);
    for (auto sc : kAllConcepts) {
      const auto s = solve(sc, f, u);
      r.expect(s == solve(sc, f, v), to_string(sc) + " changed under transform");
      r.expect(s == solve(sc, f, o), to_string(sc) + " differs on ranks");
    }
    r.expect(oracle::as_profiles(f, pure_nash(f, u).profiles) == oracle::nash(f, u),
             "NE differs from definition");
    r.expect(oracle::as_profiles(f, undominated_profiles(f, u).profiles) ==
                 oracle::undominated(f, u),
             "UNDOM differs from definition");
    r.expect(!pareto_optimal_profiles(f, u).empty(), "PO empty");
    r.expect(!undominated_profiles(f, u).empty(), "UNDOM empty");
    const auto ne = pure_nash(f, u);
    for (ProfileIndex p : optimal_nash(f, u).profiles) {
      r.expect(ne.contains(p), "OptNE not inside NE");
    }
  }
  return r;
}

// On injective frames the graph neighborhood is the deviation closure.
inline Run closure_agreement(int n, std::uint64_t seed = 4) {
  Run r{"deviation closure equals neighborhood"};
  std::mt19937_64 rng(seed);
  for (; r.cases < n; ++r.cases) {
    std::vector<std::size_t> counts(pick(rng, 1, 3));
    for (auto& c : counts) c = pick(rng, 1, 3);
    const GameFrame f = GameFrame::injective(counts);
    const DevGraph g = DevGraph::build(f);
    const Objective goal = random_goal(rng, f.num_outcomes());
    const auto pre = preimage(f, goal);
    const auto closed = deviation_closure(f, pre);
    r.expect(neighborhood(g, goal) == objective_of_profiles(f, closed),
             "neighborhood differs from closure");
    std::set<StrategyProfile> s;
    for (ProfileIndex p : pre) s.insert(f.profile_at(p));
    r.expect(oracle::as_profiles(f, closed) == oracle::closure(f, s),
             "closure differs from definition");
    r.expect(std::includes(closed.begin(), closed.end(), pre.begin(), pre.end()),
             "closure misses its seed");
  }
  return r;
}

// Plan counts, compile/play agreement and format/parse round trip.
inline Run protocol_invariants(int n, std::uint64_t seed = 5) {
  Run r{"protocol plan count and round trip"};
  std::mt19937_64 rng(seed);
  while (r.cases < n) {
    const std::size_t agents = pick(rng, 1, 3);
    std::string text = "(agents";
    for (std::size_t i = 0; i < agents; ++i) text += " P" + std::to_string(i);
    text += ")\n" + random_tree(rng, agents, 4);
    const ProtocolTree t = parse_protocol(text);
    std::vector<std::size_t> expected(agents, 1);
    std::size_t total = 1;
    for (std::size_t i = 0; i < agents; ++i) {
      for (std::size_t id : t.nodes_of(i)) expected[i] *= t.nodes[id].actions.size();
      total *= expected[i];
    }
    // Redraw trees whose strategic form would be large.
    if (total > 4096) continue;
    std::vector<std::vector<ConditionalPlan>> all;
    for (std::size_t i = 0; i < agents; ++i) {
      all.push_back(plans(t, i));
      r.expect(all.back().size() == expected[i], "plan count");
    }
    const GameFrame f = to_frame(t);
    r.expect(f.num_profiles() == total, "profile count");
    for (ProfileIndex p = 0; p < f.num_profiles(); ++p) {
      std::vector<ConditionalPlan> profile;
      for (std::size_t i = 0; i < agents; ++i) {
        profile.push_back(all[i][f.strategy_at(p, i)]);
      }
      r.expect(f.outcome_name(f.outcome_at(p)) == play(t, profile).label,
               "compiled outcome differs from play");
    }
    const ProtocolTree again = parse_protocol(format_protocol(t));
    r.expect(format_protocol(again) == format_protocol(t), "round trip");
    ++r.cases;
  }
  return r;
}

inline std::vector<Run> all(int n) {
  return {permutation_closure(n), defender_monotonicity(n), ordinal_invariance(n),
          closure_agreement(n), protocol_invariants(n)};
}

}  // namespace properties

#endif  // PROTODEF_TESTS_PROPERTIES_HPP_
