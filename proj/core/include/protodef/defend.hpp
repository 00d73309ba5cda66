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

#ifndef PROTODEF_DEFEND_HPP_
#define PROTODEF_DEFEND_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "protodef/game.hpp"
#include "protodef/index_set.hpp"
#include "protodef/preferences.hpp"
#include "protodef/solution.hpp"

namespace protodef {

enum class Method { kOracle, kCharacterization, kExperimental };

std::string to_string(Method m);

// A utility profile under which correctness fails. `offending` is a
// solution profile whose outcome leaves the goal; it is empty when the
// solution set itself is empty (and the goal is not everything).
struct Witness {
  UtilityProfile utilities;
  std::optional<ProfileIndex> offending;
  std::uint64_t index = 0;  // position in the supporting-profile stream
};

struct Verdict {
  bool holds = false;
  Method method = Method::kOracle;
  std::optional<Witness> witness;
  std::uint64_t profiles_checked = 0;
};

struct OracleOptions {
  // Work units are utility profiles times strategy profiles.
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;
  // Enumerate strict orders only instead of weak orders.
  bool strict = false;
};

bool is_correct(const GameFrame& frame, const UtilityProfile& u,
                SolutionConceptId sc, const Objective& goal);

// Correctness under mixed Nash equilibria (two agents): every profile in
// the support of every equilibrium maps into the goal.
bool is_correct_mixed(const GameFrame& frame, const UtilityProfile& u,
                      const Objective& goal);

// Exhaustive check over the ordinal supporting profiles. The witness, if
// any, is the first failure in enumeration order for every thread count.
Verdict defendable_oracle(const GameFrame& frame, const Objective& goal,
                          const DefenderSet& defenders, SolutionConceptId sc,
                          const OracleOptions& opts = {});

// Defendability by nobody.
Verdict valid(const GameFrame& frame, const Objective& goal,
              SolutionConceptId sc, const OracleOptions& opts = {});

// Re-solves under the witness utilities and confirms the violation.
bool replay_witness(const GameFrame& frame, const Objective& goal,
                    const DefenderSet& defenders, SolutionConceptId sc,
                    const Witness& w);

// Profiles one unilateral deviation away from S (S included), ascending.
std::vector<ProfileIndex> deviation_closure(
    const GameFrame& frame, const std::vector<ProfileIndex>& profiles);

// Graph conditions for defendability by all agents. Both throw InvalidInput
// for a trivial goal.
bool defendable_NE_characterization(const GameFrame& frame,
                                    const Objective& goal);
bool defendable_OptNE_characterization(const GameFrame& frame,
                                       const Objective& goal);

// Profile-level variant for non-injective frames: knot analysis on the
// profile lines inside o^-1(goal), ignoring lines on which every profile
// yields the same outcome. Accepts NE and OPTNE only.
bool defendable_experimental(const GameFrame& frame, const Objective& goal,
                             SolutionConceptId sc);

// Mixed Nash equilibria can always be made to leave a nontrivial goal.
bool defendable_mixed_NE(const GameFrame& frame, const Objective& goal);

// chi[i] is the set of strategies agent i uses inside o^-1(goal).
using ProductDecomposition = std::vector<std::vector<std::size_t>>;

std::optional<ProductDecomposition> product_decomposition(
    const GameFrame& frame, const Objective& goal);
bool defendable_mixed_OptNE(const GameFrame& frame, const Objective& goal);

struct SecurityLevel {
  // Minimal defender sets, by cardinality then agent index.
  std::vector<DefenderSet> members;
  std::uint64_t oracle_calls = 0;
};

SecurityLevel security_level(const GameFrame& frame, const Objective& goal,
                             SolutionConceptId sc,
                             const OracleOptions& opts = {});

}  // namespace protodef

#endif  // PROTODEF_DEFEND_HPP_
