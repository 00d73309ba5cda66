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

#include "protodef/game.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "protodef/error.hpp"

namespace protodef {

GameFrame::GameFrame(std::vector<std::string> agents,
                     std::vector<std::vector<std::string>> strategies,
                     std::vector<std::string> outcomes,
                     std::vector<OutcomeId> outcome_map)
    : agents_(std::move(agents)), strategies_(std::move(strategies)) {
  if (agents_.empty()) throw InvalidInput("a game needs at least one agent");
  if (strategies_.size() != agents_.size()) {
    throw InvalidInput("strategy lists do not match the agent count");
  }
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (agents_[i] == agents_[j]) {
        throw InvalidInput("duplicate agent name '" + agents_[i] + "'");
      }
    }
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < strategies_.size(); ++i) {
    if (strategies_[i].empty()) {
      throw InvalidInput("agent '" + agents_[i] + "' has no strategies");
    }
    total *= strategies_[i].size();
  }
  if (outcome_map.size() != total) {
    throw InvalidInput("outcome_map has " + std::to_string(outcome_map.size()) +
                       " entries, expected " + std::to_string(total));
  }
  strides_.assign(agents_.size(), 1);
  for (std::size_t i = agents_.size(); i-- > 1;) {
    strides_[i - 1] = strides_[i] * strategies_[i].size();
  }

  std::vector<bool> used(outcomes.size(), false);
  for (OutcomeId w : outcome_map) {
    if (w >= outcomes.size()) throw InvalidInput("outcome id out of range");
    used[w] = true;
  }
  std::vector<OutcomeId> remap(outcomes.size(), 0);
  for (std::size_t w = 0; w < outcomes.size(); ++w) {
    if (used[w]) {
      remap[w] = outcomes_.size();
      outcomes_.push_back(std::move(outcomes[w]));
    } else {
      pruned_.push_back(std::move(outcomes[w]));
    }
  }
  for (std::size_t i = 0; i < outcomes_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (outcomes_[i] == outcomes_[j]) {
        throw InvalidInput("duplicate outcome name '" + outcomes_[i] + "'");
      }
    }
  }
  outcome_map_.reserve(outcome_map.size());
  for (OutcomeId w : outcome_map) outcome_map_.push_back(remap[w]);
}

GameFrame GameFrame::from_table(std::vector<std::size_t> strategy_counts,
                                std::vector<OutcomeId> outcome_map) {
  std::vector<std::string> agents;
  std::vector<std::vector<std::string>> strategies;
  for (std::size_t i = 0; i < strategy_counts.size(); ++i) {
    agents.push_back("A" + std::to_string(i));
    std::vector<std::string> names;
    for (std::size_t k = 0; k < strategy_counts[i]; ++k) {
      names.push_back("s" + std::to_string(k));
    }
    strategies.push_back(std::move(names));
  }
  OutcomeId top = 0;
  for (OutcomeId w : outcome_map) top = std::max(top, w + 1);
  std::vector<std::string> outcomes;
  for (OutcomeId w = 0; w < top; ++w) outcomes.push_back("w" + std::to_string(w));
  return GameFrame(std::move(agents), std::move(strategies),
                   std::move(outcomes), std::move(outcome_map));
}

GameFrame GameFrame::injective(std::vector<std::size_t> strategy_counts) {
  std::size_t total = 1;
  for (std::size_t c : strategy_counts) total *= c;
  std::vector<OutcomeId> map(total);
  for (std::size_t p = 0; p < total; ++p) map[p] = p;
  return from_table(std::move(strategy_counts), std::move(map));
}

const std::string& GameFrame::agent_name(std::size_t agent) const {
  if (agent >= agents_.size()) throw InvalidInput("agent index out of range");
  return agents_[agent];
}

std::optional<std::size_t> GameFrame::find_agent(std::string_view name) const {
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    if (agents_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t GameFrame::num_strategies(std::size_t agent) const {
  if (agent >= agents_.size()) throw InvalidInput("agent index out of range");
  return strategies_[agent].size();
}

const std::string& GameFrame::strategy_name(std::size_t agent,
                                            std::size_t k) const {
  if (k >= num_strategies(agent)) {
    throw InvalidInput("strategy index out of range");
  }
  return strategies_[agent][k];
}

std::optional<std::size_t> GameFrame::find_strategy(
    std::size_t agent, std::string_view name) const {
  const auto& list = strategies_.at(agent);
  for (std::size_t k = 0; k < list.size(); ++k) {
    if (list[k] == name) return k;
  }
  return std::nullopt;
}

const std::string& GameFrame::outcome_name(OutcomeId w) const {
  if (w >= outcomes_.size()) throw InvalidInput("outcome id out of range");
  return outcomes_[w];
}

std::optional<OutcomeId> GameFrame::find_outcome(std::string_view name) const {
  for (std::size_t w = 0; w < outcomes_.size(); ++w) {
    if (outcomes_[w] == name) return w;
  }
  return std::nullopt;
}

void GameFrame::validate(const StrategyProfile& s) const {
  if (s.size() != agents_.size()) {
    throw InvalidInput("profile has " + std::to_string(s.size()) +
                       " entries for " + std::to_string(agents_.size()) +
                       " agents");
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= strategies_[i].size()) {
      throw InvalidInput("strategy " + std::to_string(s[i]) +
                         " out of range for agent '" + agents_[i] + "'");
    }
  }
}

ProfileIndex GameFrame::index_of(const StrategyProfile& s) const {
  validate(s);
  ProfileIndex p = 0;
  for (std::size_t i = 0; i < s.size(); ++i) p += s[i] * strides_[i];
  return p;
}

StrategyProfile GameFrame::profile_at(ProfileIndex p) const {
  if (p >= outcome_map_.size()) throw InvalidInput("profile index out of range");
  StrategyProfile s(agents_.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = strategy_at(p, i);
  return s;
}

std::string GameFrame::describe(const StrategyProfile& s) const {
  validate(s);
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << strategies_[i][s[i]];
  }
  out << ')';
  return out.str();
}

StrategyProfile deviate(const GameFrame& frame, const StrategyProfile& s,
                        std::size_t agent, std::size_t strategy) {
  frame.validate(s);
  if (agent >= frame.num_agents()) {
    throw InvalidInput("agent index out of range");
  }
  if (strategy >= frame.num_strategies(agent)) {
    throw InvalidInput("strategy index out of range");
  }
  StrategyProfile out = s;
  out[agent] = strategy;
  return out;
}

OutcomeId outcome_of(const GameFrame& frame, const StrategyProfile& s) {
  return frame.outcome_at(frame.index_of(s));
}

bool is_nontrivial(const GameFrame& frame, const Objective& goal) {
  if (goal.universe() != frame.num_outcomes()) {
    throw InvalidInput("objective does not match the outcome set");
  }
  return !goal.empty() && !goal.is_full();
}

std::vector<ProfileIndex> preimage(const GameFrame& frame,
                                   const Objective& goal) {
  std::vector<ProfileIndex> out;
  for (ProfileIndex p = 0; p < frame.num_profiles(); ++p) {
    if (goal.contains(frame.outcome_at(p))) out.push_back(p);
  }
  return out;
}

Objective objective_of_profiles(const GameFrame& frame,
                                std::span<const ProfileIndex> profiles) {
  Objective goal(frame.num_outcomes());
  for (ProfileIndex p : profiles) goal.insert(frame.outcome_at(p));
  return goal;
}

}  // namespace protodef
