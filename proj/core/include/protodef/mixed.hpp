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

#ifndef PROTODEF_MIXED_HPP_
#define PROTODEF_MIXED_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "protodef/game.hpp"
#include "protodef/preferences.hpp"
#include "protodef/rational.hpp"

namespace protodef {

struct MixedEquilibrium {
  MixedProfile profile;
  // Set when the support pair admits a continuum of equilibria. The
  // profile is then the barycenter of the vertices below, which has
  // exactly the given support.
  bool degenerate = false;
  std::vector<MixedProfile> vertices;
};

struct MixedNashOptions {
  // Upper bound on the number of support pairs examined.
  std::uint64_t max_support_pairs = 1u << 22;
};

// All mixed Nash equilibria found by support enumeration over a two-agent
// game with cardinal utilities, in exact arithmetic. Support pairs are
// visited by ascending bitmask (agent 0 outer), so output order is fixed.
std::vector<MixedEquilibrium> mixed_nash_2p(const GameFrame& frame,
                                            const UtilityProfile& u,
                                            const MixedNashOptions& opts = {});

// Expected utility of every agent under a mixed profile.
std::vector<Rational> expected_utilities(const GameFrame& frame,
                                         const UtilityProfile& u,
                                         const MixedProfile& m);

// Expected utility of `agent` playing pure strategy k against m.
Rational expected_utility_against(const GameFrame& frame,
                                  const UtilityProfile& u,
                                  const MixedProfile& m, std::size_t agent,
                                  std::size_t k);

// Equilibria not strongly Pareto-dominated in expected utility by another
// listed equilibrium.
std::vector<MixedEquilibrium> optimal_mixed(
    const GameFrame& frame, const UtilityProfile& u,
    std::vector<MixedEquilibrium> equilibria);

}  // namespace protodef

#endif  // PROTODEF_MIXED_HPP_
