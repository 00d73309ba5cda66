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

#ifndef PROTODEF_PREFERENCES_HPP_
#define PROTODEF_PREFERENCES_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "protodef/game.hpp"
#include "protodef/index_set.hpp"
#include "protodef/rational.hpp"

namespace protodef {

// Ordinal preference over outcomes. Ranks are canonical: every value in
// 0..levels()-1 occurs, larger is preferred, equal ranks are indifferent.
class WeakOrder {
 public:
  WeakOrder() = default;

  // Canonicalizes arbitrary integer scores (order-preserving).
  static WeakOrder from_scores(std::span<const long long> scores);
  // Throws InvalidInput unless `ranks` is already canonical.
  static WeakOrder from_ranks(std::vector<int> ranks);

  std::size_t size() const { return ranks_.size(); }
  std::size_t levels() const;
  int rank(OutcomeId w) const { return ranks_[w]; }
  const std::vector<int>& ranks() const { return ranks_; }

  friend bool operator==(const WeakOrder&, const WeakOrder&) = default;
  friend auto operator<=>(const WeakOrder&, const WeakOrder&) = default;

 private:
  explicit WeakOrder(std::vector<int> ranks) : ranks_(std::move(ranks)) {}
  std::vector<int> ranks_;
};

using CardinalUtility = std::vector<Rational>;
using AgentUtility = std::variant<WeakOrder, CardinalUtility>;

// One utility function per agent, attached to outcomes.
class UtilityProfile {
 public:
  UtilityProfile() = default;
  explicit UtilityProfile(std::vector<AgentUtility> per_agent);

  static UtilityProfile ordinal(std::vector<WeakOrder> orders);
  static UtilityProfile cardinal(std::vector<CardinalUtility> values);

  std::size_t num_agents() const { return per_agent_.size(); }
  std::size_t num_outcomes() const;
  const AgentUtility& agent(std::size_t i) const { return per_agent_[i]; }

  bool is_ordinal() const;   // every agent ordinal
  bool is_cardinal() const;  // every agent cardinal

  // u_i(w), with ordinal ranks read as integers.
  Rational value(std::size_t agent, OutcomeId w) const;
  // Sign of u_i(a) - u_i(b).
  int compare(std::size_t agent, OutcomeId a, OutcomeId b) const;

  // Rank tables (ordinal view) and rational tables (cardinal view).
  std::vector<std::vector<int>> rank_table() const;
  std::vector<std::vector<Rational>> value_table() const;

  // Throws InvalidInput unless the profile fits the frame.
  void validate(const GameFrame& frame) const;

  friend bool operator==(const UtilityProfile&, const UtilityProfile&) =
      default;

 private:
  std::vector<AgentUtility> per_agent_;
};

// Per agent, a probability per strategy.
class MixedProfile {
 public:
  MixedProfile() = default;
  explicit MixedProfile(std::vector<std::vector<Rational>> probabilities);

  static MixedProfile pure(const GameFrame& frame, const StrategyProfile& s);

  std::size_t num_agents() const { return p_.size(); }
  const std::vector<Rational>& agent(std::size_t i) const { return p_[i]; }
  const Rational& probability(std::size_t agent, std::size_t k) const {
    return p_[agent][k];
  }
  std::vector<std::size_t> support(std::size_t agent) const;
  bool is_pure() const;

  // dom(s): every pure profile built from supported strategies.
  std::vector<ProfileIndex> support_profiles(const GameFrame& frame) const;

  friend bool operator==(const MixedProfile&, const MixedProfile&) = default;

 private:
  std::vector<std::vector<Rational>> p_;
};

// Every agent in D strictly prefers each goal outcome to each other outcome.
bool supports(const DefenderSet& defenders, const UtilityProfile& u,
              const Objective& goal);

// Ordered Bell numbers (or m! with strict=true); saturates at UINT64_MAX.
std::uint64_t count_weak_orders(std::size_t m, bool strict = false);

// Visits each canonical weak order on m elements once, in lexicographic
// order of the rank vector. m = 0 yields the single empty order.
void for_each_weak_order(std::size_t m,
                         const std::function<void(const WeakOrder&)>& visit,
                         bool strict = false);
std::vector<WeakOrder> enumerate_weak_orders(std::size_t m,
                                             bool strict = false);

// The ordinal utility profiles under which D supports the goal, up to
// ordinal equivalence. Random access by index: agent 0 is the most
// significant digit. For agents in D the weak order on the goal is the
// slower digit and the order on the remaining outcomes the faster one.
class SupportingProfiles {
 public:
  SupportingProfiles(const GameFrame& frame, const Objective& goal,
                     const DefenderSet& defenders, bool strict = false);

  // Product of the per-agent counts, or UINT64_MAX on overflow.
  std::uint64_t size() const { return size_; }
  std::size_t num_agents() const { return choices_.size(); }
  std::size_t choices(std::size_t agent) const {
    return choices_[agent].size();
  }
  const WeakOrder& choice(std::size_t agent, std::size_t k) const {
    return choices_[agent][k];
  }

  std::vector<std::size_t> digits(std::uint64_t index) const;
  UtilityProfile at(std::uint64_t index) const;

 private:
  std::vector<std::vector<WeakOrder>> choices_;
  std::uint64_t size_ = 1;
};

void for_each_supporting_profile(
    const GameFrame& frame, const Objective& goal, const DefenderSet& defenders,
    const std::function<void(const UtilityProfile&)>& visit);

// Strategy relabelling: pi[i][k] is the new index of agent i's strategy k.
using PermutationProfile = std::vector<std::vector<std::size_t>>;

struct PermutedGame {
  GameFrame frame;
  UtilityProfile utilities;
};

// The relabelled game: o'(pi(s)) = o(s). Utilities are unchanged since they
// attach to outcomes.
PermutedGame permute(const GameFrame& frame, const UtilityProfile& u,
                     const PermutationProfile& pi);
StrategyProfile apply_permutation(const PermutationProfile& pi,
                                  const StrategyProfile& s);

}  // namespace protodef

#endif  // PROTODEF_PREFERENCES_HPP_
