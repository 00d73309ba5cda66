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
#include "protodef/defend.hpp"
#include "protodef/error.hpp"
#include "test_util.hpp"

using namespace protodef;
using testing_util::cardinal;
using testing_util::ng;
using testing_util::ng_utilities;
using testing_util::ordinal;

namespace {

constexpr SolutionConceptId kAll[] = {SolutionConceptId::kNE, SolutionConceptId::kOptNE,
                                      SolutionConceptId::kUndom, SolutionConceptId::kPO};

std::set<StrategyProfile> reference_solve(SolutionConceptId sc, const GameFrame& f,
                                          const UtilityProfile& u) {
  switch (sc) {
    case SolutionConceptId::kNE: return oracle::nash(f, u);
    case SolutionConceptId::kOptNE: return oracle::optimal_nash(f, u);
    case SolutionConceptId::kUndom: return oracle::undominated(f, u);
    case SolutionConceptId::kPO: return oracle::pareto(f, u);
  }
  return {};
}

// Defendability straight from the definition: every rejection-filtered
// ordinal profile, solved by the reference implementations.
bool reference_defendable(const GameFrame& f, const Objective& goal,
                          const std::vector<std::size_t>& defenders,
                          SolutionConceptId sc) {
  std::vector<bool> in(f.num_outcomes());
  for (std::size_t w = 0; w < in.size(); ++w) in[w] = goal.contains(w);
  for (const auto& ranks :
       oracle::brute_supporting(f.num_agents(), f.num_outcomes(), defenders, in)) {
    std::vector<WeakOrder> orders;
    for (const auto& r : ranks) orders.push_back(WeakOrder::from_ranks(r));
    const auto u = UtilityProfile::ordinal(orders);
    const auto sol = reference_solve(sc, f, u);
    if (sol.empty()) {
      if (!goal.is_full()) return false;
      continue;
    }
    for (const auto& s : sol) {
      if (!goal.contains(outcome_of(f, s))) return false;
    }
  }
  return true;
}

Objective goal_of(std::size_t m, unsigned mask) {
  Objective g(m);
  for (std::size_t w = 0; w < m; ++w) {
    if ((mask >> w) & 1u) g.insert(w);
  }
  return g;
}

}  // namespace

TEST_SUITE("defendability") {

TEST_CASE("correctness") {
  const auto u = ng_utilities();
  CHECK(is_correct(ng(), u, SolutionConceptId::kNE, Objective(3, {0, 2})));
  CHECK_FALSE(is_correct(ng(), u, SolutionConceptId::kNE, Objective(3, {2})));
  const GameFrame sq = GameFrame::injective({2, 2});
  const auto pennies = cardinal({{1, -1, -1, 1}, {-1, 1, 1, -1}});
  CHECK(is_correct(sq, pennies, SolutionConceptId::kNE, Objective::full(4)));
  CHECK_FALSE(is_correct(sq, pennies, SolutionConceptId::kNE, Objective(4, {0, 1, 2})));
}

TEST_CASE("mixed correctness") {
  const GameFrame sq = GameFrame::injective({2, 2});
  const auto pennies = cardinal({{1, -1, -1, 1}, {-1, 1, 1, -1}});
  CHECK(is_correct_mixed(sq, pennies, Objective::full(4)));
  CHECK_FALSE(is_correct_mixed(sq, pennies, Objective(4, {0, 3})));
  const auto dominant = cardinal({{3, 0, 5, 1}, {3, 5, 0, 1}});
  CHECK(is_correct_mixed(sq, dominant, Objective(4, {3})));
  CHECK_THROWS_AS(is_correct_mixed(GameFrame::injective({2, 2, 1}), pennies,
                                   Objective::full(4)),
                  UnsupportedOperation);
}

TEST_CASE("oracle on the naive game") {
  const GameFrame f = ng();
  const auto both = DefenderSet::full(2);
  const Verdict v = defendable_oracle(f, Objective(3, {0, 2}), both, SolutionConceptId::kNE);
  CHECK(v.holds);
  CHECK(v.profiles_checked == 9);
  CHECK_FALSE(v.witness);

  const Verdict w = defendable_oracle(f, Objective(3, {2}), both, SolutionConceptId::kNE);
  CHECK_FALSE(w.holds);
  REQUIRE(w.witness);
  CHECK(replay_witness(f, Objective(3, {2}), both, SolutionConceptId::kNE, *w.witness));
  REQUIRE(w.witness->offending);
  CHECK(f.outcome_name(f.outcome_at(*w.witness->offending)) == "w0");

  // The hand-checkable witness: A: w2 > w0 > w1, B: w2 > w1 > w0.
  const Witness hand{ordinal({{1, 0, 2}, {0, 1, 2}}), ProfileIndex{0}, 0};
  CHECK(replay_witness(f, Objective(3, {2}), both, SolutionConceptId::kNE, hand));

  CHECK(defendable_oracle(f, Objective::full(3), DefenderSet(2), SolutionConceptId::kNE).holds);
}

TEST_CASE("oracle equals the definition on small frames") {
  const std::vector<GameFrame> frames{ng(), GameFrame::injective({2, 2}),
                                      GameFrame::from_table({2, 2}, {0, 1, 1, 2})};
  for (const auto& f : frames) {
    const std::size_t m = f.num_outcomes();
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      const Objective goal = goal_of(m, mask);
      for (unsigned dmask = 0; dmask < 4; ++dmask) {
        std::vector<std::size_t> ds;
        for (std::size_t i = 0; i < 2; ++i) {
          if ((dmask >> i) & 1u) ds.push_back(i);
        }
        for (auto sc : kAll) {
          const Verdict v = defendable_oracle(f, goal, DefenderSet::of(2, ds), sc);
          CHECK(v.holds == reference_defendable(f, goal, ds, sc));
          if (!v.holds) {
            REQUIRE(v.witness);
            CHECK(replay_witness(f, goal, DefenderSet::of(2, ds), sc, *v.witness));
          }
        }
      }
    }
  }
}

TEST_CASE("true verdicts survive random cardinal supporting utilities") {
  std::mt19937_64 rng(11);
  const GameFrame f = GameFrame::injective({2, 3});
  for (unsigned mask = 1; mask < 63; ++mask) {
    const Objective goal = goal_of(6, mask);
    for (auto sc : kAll) {
      if (!defendable_oracle(f, goal, DefenderSet::full(2), sc).holds) continue;
      for (int k = 0; k < 100; ++k) {
        const auto u = oracle::random_supporting_cardinal(rng, 2, goal, {true, true});
        CHECK(is_correct(f, u, sc, goal));
      }
    }
  }
}

TEST_CASE("validity") {
  const GameFrame f = ng();
  CHECK_FALSE(valid(f, Objective(3, {0, 2}), SolutionConceptId::kNE).holds);
  CHECK(valid(f, Objective::full(3), SolutionConceptId::kNE).holds);
  const GameFrame sq = GameFrame::injective({2, 2});
  for (unsigned mask = 1; mask < 15; ++mask) {
    CHECK_FALSE(valid(sq, goal_of(4, mask), SolutionConceptId::kNE).holds);
  }
}

TEST_CASE("budget and threads") {
  const GameFrame f = GameFrame::injective({2, 3});
  OracleOptions tiny;
  tiny.budget = 600;
  // A holding verdict needs the whole stream.
  CHECK_THROWS_AS(defendable_oracle(f, Objective(6, {0, 1, 2}), DefenderSet::full(2),
                                    SolutionConceptId::kNE, tiny),
                  ResourceLimit);
  // A failure inside the budget is still reported.
  const Verdict early =
      defendable_oracle(f, Objective(6, {0}), DefenderSet(2), SolutionConceptId::kNE, tiny);
  CHECK_FALSE(early.holds);

  OracleOptions one, many;
  many.threads = 4;
  for (unsigned mask = 1; mask < 63; mask += 5) {
    const Objective goal = goal_of(6, mask);
    for (auto sc : kAll) {
      const Verdict a = defendable_oracle(f, goal, DefenderSet(2, {1}), sc, one);
      const Verdict b = defendable_oracle(f, goal, DefenderSet(2, {1}), sc, many);
      CHECK(a.holds == b.holds);
      CHECK(a.profiles_checked == b.profiles_checked);
      if (a.witness) CHECK(a.witness->index == b.witness->index);
    }
  }
}

TEST_CASE("deviation closure") {
  const GameFrame f = ng();
  CHECK(deviation_closure(f, {3}) == std::vector<ProfileIndex>{1, 2, 3});
  CHECK(deviation_closure(f, {0, 1, 2, 3}) == std::vector<ProfileIndex>{0, 1, 2, 3});
  CHECK(deviation_closure(f, {}).empty());
}

TEST_CASE("graph characterizations") {
  const GameFrame f = ng();
  CHECK(defendable_NE_characterization(f, Objective(3, {0, 2})));
  CHECK(defendable_NE_characterization(f, Objective(3, {2})));  // oracle disagrees
  CHECK(defendable_OptNE_characterization(f, Objective(3, {0, 2})));
  const GameFrame sq = GameFrame::injective({2, 2});
  CHECK_FALSE(defendable_NE_characterization(sq, Objective(4, {0})));
  CHECK(defendable_OptNE_characterization(sq, Objective(4, {0})));
  const GameFrame nine = GameFrame::injective({3, 3});
  CHECK_FALSE(defendable_OptNE_characterization(nine, Objective(9, {0, 1, 3, 4})));
  CHECK_THROWS_AS(defendable_NE_characterization(f, Objective::full(3)), InvalidInput);
  CHECK_THROWS_AS(defendable_OptNE_characterization(f, Objective(3)), InvalidInput);
}

TEST_CASE("experimental method never claims more than the oracle") {
  const std::vector<GameFrame> frames{ng(), GameFrame::from_table({2, 2}, {0, 1, 1, 2}),
                                      GameFrame::from_table({2, 3}, {0, 0, 1, 2, 1, 3})};
  for (const auto& f : frames) {
    const std::size_t m = f.num_outcomes();
    for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
      const Objective goal = goal_of(m, mask);
      for (auto sc : {SolutionConceptId::kNE, SolutionConceptId::kOptNE}) {
        if (defendable_experimental(f, goal, sc)) {
          CHECK(defendable_oracle(f, goal, DefenderSet::full(2), sc).holds);
        }
      }
    }
  }
  CHECK_THROWS_AS(defendable_experimental(ng(), Objective(3, {2}), SolutionConceptId::kPO),
                  UnsupportedOperation);
}

TEST_CASE("mixed structural checks") {
  const GameFrame f = ng();
  CHECK(defendable_mixed_NE(f, Objective::full(3)));
  CHECK_FALSE(defendable_mixed_NE(f, Objective(3, {0, 2})));
  CHECK_FALSE(defendable_mixed_NE(f, Objective(3, {1})));

  const GameFrame g = GameFrame::injective({2, 3});
  const auto chi = product_decomposition(g, Objective(6, {0, 1}));
  REQUIRE(chi);
  CHECK((*chi)[0] == std::vector<std::size_t>{0});
  CHECK((*chi)[1] == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(product_decomposition(f, Objective(3, {0, 2})));
  const auto full = product_decomposition(f, Objective::full(3));
  REQUIRE(full);
  CHECK((*full)[0].size() == 2);
  CHECK((*full)[1].size() == 2);
  CHECK(defendable_mixed_OptNE(g, Objective(6, {0, 1})));
  CHECK_FALSE(defendable_mixed_OptNE(f, Objective(3, {0, 2})));
  CHECK(defendable_mixed_OptNE(f, Objective::full(3)));
}

TEST_CASE("security levels") {
  const GameFrame f = ng();
  const auto level = security_level(f, Objective(3, {0, 2}), SolutionConceptId::kNE);
  REQUIRE(level.members.size() == 2);
  CHECK(level.members[0] == DefenderSet(2, {0}));
  CHECK(level.members[1] == DefenderSet(2, {1}));
  const auto all = security_level(f, Objective::full(3), SolutionConceptId::kNE);
  REQUIRE(all.members.size() == 1);
  CHECK(all.members[0].empty());
  CHECK(all.oracle_calls == 1);
}

}  // TEST_SUITE
