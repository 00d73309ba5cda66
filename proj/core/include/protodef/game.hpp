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

#ifndef PROTODEF_GAME_HPP_
#define PROTODEF_GAME_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "protodef/index_set.hpp"

namespace protodef {

using OutcomeId = std::size_t;
using ProfileIndex = std::size_t;

// One strategy index per agent, ordered by agent index.
using StrategyProfile = std::vector<std::size_t>;

struct AgentId {
  std::size_t index = 0;
  std::string name;

  friend bool operator==(const AgentId&, const AgentId&) = default;
};

// A finite normal-form game frame (agents, strategy sets, outcomes and a
// total outcome map). Profiles are addressed either as StrategyProfile or
// as a flat mixed-radix ProfileIndex with agent 0 most significant; this is
// the same order as the `outcome_map` list in the game file format.
//
// The outcome map is made surjective on construction: outcomes that no
// profile produces are dropped and reported through pruned_outcomes().
class GameFrame {
 public:
  GameFrame(std::vector<std::string> agents,
            std::vector<std::vector<std::string>> strategies,
            std::vector<std::string> outcomes,
            std::vector<OutcomeId> outcome_map);

  // Convenience constructor for tests: outcome names default to "w<k>".
  static GameFrame from_table(std::vector<std::size_t> strategy_counts,
                              std::vector<OutcomeId> outcome_map);

  // Injective frame of the given shape; profile k yields outcome k.
  static GameFrame injective(std::vector<std::size_t> strategy_counts);

  std::size_t num_agents() const { return agents_.size(); }
  const std::string& agent_name(std::size_t agent) const;
  AgentId agent(std::size_t index) const { return {index, agent_name(index)}; }
  std::optional<std::size_t> find_agent(std::string_view name) const;
  const std::vector<std::string>& agent_names() const { return agents_; }

  std::size_t num_strategies(std::size_t agent) const;
  const std::string& strategy_name(std::size_t agent, std::size_t k) const;
  std::optional<std::size_t> find_strategy(std::size_t agent,
                                           std::string_view name) const;
  const std::vector<std::vector<std::string>>& strategy_names() const {
    return strategies_;
  }

  std::size_t num_outcomes() const { return outcomes_.size(); }
  const std::string& outcome_name(OutcomeId w) const;
  std::optional<OutcomeId> find_outcome(std::string_view name) const;
  const std::vector<std::string>& outcome_names() const { return outcomes_; }
  const std::vector<std::string>& pruned_outcomes() const { return pruned_; }

  std::size_t num_profiles() const { return outcome_map_.size(); }
  std::span<const OutcomeId> outcome_map() const { return outcome_map_; }
  OutcomeId outcome_at(ProfileIndex p) const { return outcome_map_[p]; }

  // Distance in ProfileIndex between strategies k and k+1 of `agent`.
  std::size_t stride(std::size_t agent) const { return strides_[agent]; }

  ProfileIndex index_of(const StrategyProfile& s) const;
  StrategyProfile profile_at(ProfileIndex p) const;
  std::size_t strategy_at(ProfileIndex p, std::size_t agent) const {
    return (p / strides_[agent]) % strategies_[agent].size();
  }

  // Throws InvalidInput unless `s` names one valid strategy per agent.
  void validate(const StrategyProfile& s) const;

  bool is_injective() const { return outcomes_.size() == outcome_map_.size(); }

  std::string describe(const StrategyProfile& s) const;

  friend bool operator==(const GameFrame&, const GameFrame&) = default;

 private:
  std::vector<std::string> agents_;
  std::vector<std::vector<std::string>> strategies_;
  std::vector<std::string> outcomes_;
  std::vector<OutcomeId> outcome_map_;
  std::vector<std::size_t> strides_;
  std::vector<std::string> pruned_;
};

// s[t/i]: the profile equal to `s` except that `agent` plays `strategy`.
StrategyProfile deviate(const GameFrame& frame, const StrategyProfile& s,
                        std::size_t agent, std::size_t strategy);

OutcomeId outcome_of(const GameFrame& frame, const StrategyProfile& s);

// Neither impossible nor guaranteed.
bool is_nontrivial(const GameFrame& frame, const Objective& goal);

// Profiles whose outcome lies in `goal`, ascending.
std::vector<ProfileIndex> preimage(const GameFrame& frame,
                                   const Objective& goal);

Objective objective_of_profiles(const GameFrame& frame,
                                std::span<const ProfileIndex> profiles);

}  // namespace protodef

#endif  // PROTODEF_GAME_HPP_
