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

#include "oracles.hpp"
#include "protodef/error.hpp"
#include "protodef/mixed.hpp"
#include "test_util.hpp"

using namespace protodef;
using testing_util::cardinal;
using testing_util::ordinal;

namespace {

MixedProfile mix(std::vector<Rational> a, std::vector<Rational> b) {
  return MixedProfile({std::move(a), std::move(b)});
}

const Rational kHalf(1, 2);

}  // namespace

TEST_SUITE("mixed-nash") {

TEST_CASE("matching pennies has only the uniform equilibrium") {
  const GameFrame f = GameFrame::injective({2, 2});
  const auto u = cardinal({{1, -1, -1, 1}, {-1, 1, 1, -1}});
  const auto eqs = mixed_nash_2p(f, u);
  REQUIRE(eqs.size() == 1);
  CHECK(eqs[0].profile == mix({kHalf, kHalf}, {kHalf, kHalf}));
  CHECK_FALSE(eqs[0].degenerate);
  CHECK(oracle::is_best_response_profile(f, u, eqs[0].profile));
}

TEST_CASE("dominant strategies give the unique pure equilibrium") {
  const GameFrame f = GameFrame::injective({2, 2});
  const auto u = cardinal({{3, 0, 5, 1}, {3, 5, 0, 1}});
  const auto eqs = mixed_nash_2p(f, u);
  REQUIRE(eqs.size() == 1);
  CHECK(eqs[0].profile == mix({0, 1}, {0, 1}));
}

TEST_CASE("battle of the sexes") {
  const GameFrame f = GameFrame::injective({2, 2});
  const auto u = cardinal({{2, 0, 0, 1}, {1, 0, 0, 2}});
  const auto eqs = mixed_nash_2p(f, u);
  REQUIRE(eqs.size() == 3);
  CHECK(eqs[0].profile == mix({1, 0}, {1, 0}));
  CHECK(eqs[1].profile == mix({0, 1}, {0, 1}));
  CHECK(eqs[2].profile ==
        mix({Rational(2, 3), Rational(1, 3)}, {Rational(1, 3), Rational(2, 3)}));
  for (const auto& e : eqs) CHECK(oracle::is_best_response_profile(f, u, e.profile));
  const auto payoff = expected_utilities(f, u, eqs[2].profile);
  CHECK(payoff[0] == Rational(2, 3));
  CHECK(payoff[1] == Rational(2, 3));
  // The mixed equilibrium is dominated by both pure ones.
  CHECK(optimal_mixed(f, u, eqs).size() == 2);
}

TEST_CASE("indifferent agents produce a degenerate support") {
  const GameFrame f = GameFrame::injective({2, 2});
  const auto u = cardinal({{0, 0, 0, 0}, {0, 0, 0, 0}});
  const auto eqs = mixed_nash_2p(f, u);
  const auto full = std::find_if(eqs.begin(), eqs.end(), [](const auto& e) {
    return e.profile.support(0).size() == 2 && e.profile.support(1).size() == 2;
  });
  REQUIRE(full != eqs.end());
  CHECK(full->degenerate);
  CHECK(full->vertices.size() == 4);
  CHECK(full->profile == mix({kHalf, kHalf}, {kHalf, kHalf}));
  for (const auto& e : eqs) {
    CHECK(oracle::is_best_response_profile(f, u, e.profile));
    for (const auto& v : e.vertices) CHECK(oracle::is_best_response_profile(f, u, v));
  }
}

TEST_CASE("non-square games") {
  const GameFrame f = GameFrame::injective({2, 3});
  const auto u = cardinal({{3, 0, 1, 0, 2, 1}, {1, 0, 2, 2, 1, 0}});
  const auto eqs = mixed_nash_2p(f, u);
  CHECK_FALSE(eqs.empty());
  for (const auto& e : eqs) CHECK(oracle::is_best_response_profile(f, u, e.profile));
}

TEST_CASE("expected utility against a pure deviation") {
  const GameFrame f = GameFrame::injective({2, 2});
  const auto u = cardinal({{1, -1, -1, 1}, {-1, 1, 1, -1}});
  const auto m = mix({kHalf, kHalf}, {1, 0});
  CHECK(expected_utility_against(f, u, m, 0, 0) == 1);
  CHECK(expected_utility_against(f, u, m, 0, 1) == -1);
}

TEST_CASE("engine limits") {
  CHECK_THROWS_AS(mixed_nash_2p(GameFrame::injective({2, 2, 2}),
                                cardinal({{0, 0, 0, 0, 0, 0, 0, 0},
                                          {0, 0, 0, 0, 0, 0, 0, 0},
                                          {0, 0, 0, 0, 0, 0, 0, 0}})),
                  UnsupportedOperation);
  CHECK_THROWS_AS(mixed_nash_2p(GameFrame::injective({2, 2}),
                                ordinal({{0, 1, 2, 3}, {3, 2, 1, 0}})),
                  InvalidInput);
  MixedNashOptions tight;
  tight.max_support_pairs = 8;
  CHECK_THROWS_AS(mixed_nash_2p(GameFrame::injective({2, 3}),
                                cardinal({{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}}),
                                tight),
                  ResourceLimit);
}

}  // TEST_SUITE
