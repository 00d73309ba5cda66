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

#ifndef PROTODEF_SOLUTION_HPP_
#define PROTODEF_SOLUTION_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "protodef/game.hpp"
#include "protodef/preferences.hpp"

namespace protodef {

enum class SolutionConceptId { kNE, kOptNE, kUndom, kPO };

std::string to_string(SolutionConceptId id);
// Accepts ne, optne, undom, po (case-insensitive).
SolutionConceptId parse_solution_concept(std::string_view text);

// A set of strategy profiles held as ascending profile indices.
struct SolutionSet {
  std::vector<ProfileIndex> profiles;

  bool empty() const { return profiles.empty(); }
  std::size_t size() const { return profiles.size(); }
  bool contains(ProfileIndex p) const;
  friend bool operator==(const SolutionSet&, const SolutionSet&) = default;
};

SolutionSet pure_nash(const GameFrame& frame, const UtilityProfile& u);
SolutionSet optimal_nash(const GameFrame& frame, const UtilityProfile& u);
SolutionSet undominated_profiles(const GameFrame& frame,
                                 const UtilityProfile& u);
SolutionSet pareto_optimal_profiles(const GameFrame& frame,
                                    const UtilityProfile& u);
SolutionSet solve(SolutionConceptId sc, const GameFrame& frame,
                  const UtilityProfile& u);

// Outcomes produced by the given profiles.
Objective outcomes_of(const GameFrame& frame, const SolutionSet& set);

namespace kernel {

// u[i][w] is agent i's value for outcome w. Instantiated for int (ordinal
// ranks) and Rational.
template <class V>
using Table = std::span<const std::vector<V>>;

template <class V>
std::vector<ProfileIndex> nash(const GameFrame& frame, Table<V> u);
template <class V>
std::vector<ProfileIndex> optimal_nash(const GameFrame& frame, Table<V> u);
template <class V>
std::vector<ProfileIndex> undominated(const GameFrame& frame, Table<V> u);
template <class V>
std::vector<ProfileIndex> pareto_optimal(const GameFrame& frame, Table<V> u);
template <class V>
std::vector<ProfileIndex> solve(SolutionConceptId sc, const GameFrame& frame,
                                Table<V> u);

// Correctness: a nonempty solution stays inside the goal, an empty
// one is only acceptable for the full outcome set. On failure `offending`
// receives a solution profile outside the goal, or stays untouched when the
// solution is empty.
template <class V>
bool correct(SolutionConceptId sc, const GameFrame& frame, Table<V> u,
             const Objective& goal, ProfileIndex* offending = nullptr);

}  // namespace kernel

}  // namespace protodef

#endif  // PROTODEF_SOLUTION_HPP_
