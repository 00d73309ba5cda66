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

#include "protodef/preferences.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "protodef/error.hpp"

namespace protodef {
namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

bool is_canonical(const std::vector<int>& ranks) {
  std::vector<bool> seen(ranks.size(), false);
  int top = -1;
  for (int r : ranks) {
    if (r < 0 || static_cast<std::size_t>(r) >= ranks.size()) return false;
    seen[r] = true;
    top = std::max(top, r);
  }
  for (int r = 0; r <= top; ++r) {
    if (!seen[r]) return false;
  }
  return true;
}

}  // namespace

WeakOrder WeakOrder::from_scores(std::span<const long long> scores) {
  std::vector<long long> levels(scores.begin(), scores.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<int> ranks;
  ranks.reserve(scores.size());
  for (long long s : scores) {
    ranks.push_back(static_cast<int>(
        std::lower_bound(levels.begin(), levels.end(), s) - levels.begin()));
  }
  return WeakOrder(std::move(ranks));
}

WeakOrder WeakOrder::from_ranks(std::vector<int> ranks) {
  if (!is_canonical(ranks)) {
    throw InvalidInput("weak order ranks must use every value 0..k-1");
  }
  return WeakOrder(std::move(ranks));
}

std::size_t WeakOrder::levels() const {
  int top = -1;
  for (int r : ranks_) top = std::max(top, r);
  return static_cast<std::size_t>(top + 1);
}

UtilityProfile::UtilityProfile(std::vector<AgentUtility> per_agent)
    : per_agent_(std::move(per_agent)) {
  const std::size_t m = num_outcomes();
  for (const auto& a : per_agent_) {
    const std::size_t n = std::visit([](const auto& x) { return x.size(); }, a);
    if (n != m) throw InvalidInput("utility functions cover different outcome counts");
  }
}

UtilityProfile UtilityProfile::ordinal(std::vector<WeakOrder> orders) {
  std::vector<AgentUtility> v;
  v.reserve(orders.size());
  for (auto& o : orders) v.emplace_back(std::move(o));
  return UtilityProfile(std::move(v));
}

UtilityProfile UtilityProfile::cardinal(std::vector<CardinalUtility> values) {
  std::vector<AgentUtility> v;
  v.reserve(values.size());
  for (auto& o : values) v.emplace_back(std::move(o));
  return UtilityProfile(std::move(v));
}

std::size_t UtilityProfile::num_outcomes() const {
  if (per_agent_.empty()) return 0;
  return std::visit([](const auto& x) { return x.size(); }, per_agent_[0]);
}

bool UtilityProfile::is_ordinal() const {
  return std::all_of(per_agent_.begin(), per_agent_.end(), [](const auto& a) {
    return std::holds_alternative<WeakOrder>(a);
  });
}

bool UtilityProfile::is_cardinal() const {
  return std::all_of(per_agent_.begin(), per_agent_.end(), [](const auto& a) {
    return std::holds_alternative<CardinalUtility>(a);
  });
}

Rational UtilityProfile::value(std::size_t agent, OutcomeId w) const {
  const auto& a = per_agent_.at(agent);
  if (const auto* o = std::get_if<WeakOrder>(&a)) return Rational(o->rank(w));
  return std::get<CardinalUtility>(a).at(w);
}

int UtilityProfile::compare(std::size_t agent, OutcomeId a, OutcomeId b) const {
  const auto& u = per_agent_.at(agent);
  if (const auto* o = std::get_if<WeakOrder>(&u)) {
    return (o->rank(a) > o->rank(b)) - (o->rank(a) < o->rank(b));
  }
  const auto& c = std::get<CardinalUtility>(u);
  return (c.at(a) > c.at(b)) - (c.at(a) < c.at(b));
}

std::vector<std::vector<int>> UtilityProfile::rank_table() const {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < per_agent_.size(); ++i) {
    const auto* o = std::get_if<WeakOrder>(&per_agent_[i]);
    if (o == nullptr) throw InvalidInput("utility profile is not ordinal");
    out.push_back(o->ranks());
  }
  return out;
}

std::vector<std::vector<Rational>> UtilityProfile::value_table() const {
  std::vector<std::vector<Rational>> out(per_agent_.size());
  for (std::size_t i = 0; i < per_agent_.size(); ++i) {
    for (std::size_t w = 0; w < num_outcomes(); ++w) {
      out[i].push_back(value(i, w));
    }
  }
  return out;
}

void UtilityProfile::validate(const GameFrame& frame) const {
  if (num_agents() != frame.num_agents()) {
    throw InvalidInput("utility profile has " + std::to_string(num_agents()) +
                       " agents, game has " +
                       std::to_string(frame.num_agents()));
  }
  if (num_outcomes() != frame.num_outcomes()) {
    throw InvalidInput("utility profile covers " +
                       std::to_string(num_outcomes()) + " outcomes, game has " +
                       std::to_string(frame.num_outcomes()));
  }
}

MixedProfile::MixedProfile(std::vector<std::vector<Rational>> probabilities)
    : p_(std::move(probabilities)) {
  for (const auto& dist : p_) {
    Rational sum = 0;
    for (const auto& x : dist) {
      if (x < 0) throw InvalidInput("negative probability");
      sum += x;
    }
    if (sum != 1) throw InvalidInput("probabilities do not sum to 1");
  }
}

MixedProfile MixedProfile::pure(const GameFrame& frame,
                                const StrategyProfile& s) {
  frame.validate(s);
  std::vector<std::vector<Rational>> p(frame.num_agents());
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i].assign(frame.num_strategies(i), Rational(0));
    p[i][s[i]] = 1;
  }
  return MixedProfile(std::move(p));
}

std::vector<std::size_t> MixedProfile::support(std::size_t agent) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < p_.at(agent).size(); ++k) {
    if (p_[agent][k] > 0) out.push_back(k);
  }
  return out;
}

bool MixedProfile::is_pure() const {
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (support(i).size() != 1) return false;
  }
  return true;
}

std::vector<ProfileIndex> MixedProfile::support_profiles(
    const GameFrame& frame) const {
  if (p_.size() != frame.num_agents()) {
    throw InvalidInput("mixed profile does not match the game");
  }
  std::vector<ProfileIndex> out{0};
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (p_[i].size() != frame.num_strategies(i)) {
      throw InvalidInput("mixed profile does not match the game");
    }
    std::vector<ProfileIndex> next;
    for (ProfileIndex base : out) {
      for (std::size_t k : support(i)) next.push_back(base + k * frame.stride(i));
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool supports(const DefenderSet& defenders, const UtilityProfile& u,
              const Objective& goal) {
  const auto inside = goal.members();
  const auto outside = goal.complement().members();
  for (std::size_t i : defenders.members()) {
    for (OutcomeId a : inside) {
      for (OutcomeId b : outside) {
        if (u.compare(i, a, b) <= 0) return false;
      }
    }
  }
  return true;
}

std::uint64_t count_weak_orders(std::size_t m, bool strict) {
  if (strict) {
    std::uint64_t f = 1;
    for (std::size_t k = 2; k <= m; ++k) f = saturating_mul(f, k);
    return f;
  }
  // F(n) = sum_k C(n,k) F(n-k): choose the top indifference class.
  std::vector<std::uint64_t> f(m + 1, 0);
  std::vector<std::vector<std::uint64_t>> c(m + 1);
  f[0] = 1;
  for (std::size_t n = 0; n <= m; ++n) {
    c[n].assign(n + 1, 1);
    for (std::size_t k = 1; k < n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
  }
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t n = 1; n <= m; ++n) {
    std::uint64_t total = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      const std::uint64_t term = saturating_mul(c[n][k], f[n - k]);
      total = (term > kMax - total) ? kMax : total + term;
    }
    f[n] = total;
  }
  return f[m];
}

void for_each_weak_order(std::size_t m,
                         const std::function<void(const WeakOrder&)>& visit,
                         bool strict) {
  std::vector<int> ranks(m, 0);
  std::vector<int> used(m + 1, 0);  // multiplicity per rank value
  // distinct = number of rank values in use, top = largest value in use.
  auto rec = [&](auto&& self, std::size_t pos, int distinct, int top) -> void {
    if (pos == m) {
      visit(WeakOrder::from_ranks(ranks));
      return;
    }
    const std::size_t left = m - pos - 1;  // positions after this one
    for (int r = 0; static_cast<std::size_t>(r) < m; ++r) {
      if (strict && used[r]) continue;
      const int nd = distinct + (used[r] ? 0 : 1);
      const int nt = std::max(top, r);
      if (static_cast<std::size_t>(nt + 1 - nd) > left) continue;
      ranks[pos] = r;
      ++used[r];
      self(self, pos + 1, nd, nt);
      --used[r];
    }
  };
  rec(rec, 0, 0, -1);
}

std::vector<WeakOrder> enumerate_weak_orders(std::size_t m, bool strict) {
  std::vector<WeakOrder> out;
  for_each_weak_order(m, [&](const WeakOrder& o) { out.push_back(o); }, strict);
  return out;
}

SupportingProfiles::SupportingProfiles(const GameFrame& frame,
                                       const Objective& goal,
                                       const DefenderSet& defenders,
                                       bool strict) {
  const std::size_t m = frame.num_outcomes();
  if (goal.universe() != m) {
    throw InvalidInput("objective does not match the outcome set");
  }
  if (defenders.universe() != frame.num_agents()) {
    throw InvalidInput("defender set does not match the agent set");
  }
  const auto inside = goal.members();
  const auto outside = goal.complement().members();

  std::vector<WeakOrder> free_orders;
  std::vector<WeakOrder> stacked;
  if (defenders.size() < frame.num_agents()) {
    free_orders = enumerate_weak_orders(m, strict);
  }
  if (!defenders.empty()) {
    const auto top = enumerate_weak_orders(inside.size(), strict);
    const auto bottom = enumerate_weak_orders(outside.size(), strict);
    for (const auto& hi : top) {
      for (const auto& lo : bottom) {
        std::vector<int> ranks(m, 0);
        const int shift = static_cast<int>(lo.levels());
        for (std::size_t k = 0; k < outside.size(); ++k) {
          ranks[outside[k]] = lo.rank(k);
        }
        for (std::size_t k = 0; k < inside.size(); ++k) {
          ranks[inside[k]] = hi.rank(k) + shift;
        }
        stacked.push_back(WeakOrder::from_ranks(std::move(ranks)));
      }
    }
  }
  for (std::size_t i = 0; i < frame.num_agents(); ++i) {
    choices_.push_back(defenders.contains(i) ? stacked : free_orders);
    size_ = saturating_mul(size_, choices_.back().size());
  }
}

std::vector<std::size_t> SupportingProfiles::digits(std::uint64_t index) const {
  if (index >= size_) throw InvalidInput("supporting profile index out of range");
  std::vector<std::size_t> d(choices_.size());
  for (std::size_t i = choices_.size(); i-- > 0;) {
    d[i] = static_cast<std::size_t>(index % choices_[i].size());
    index /= choices_[i].size();
  }
  return d;
}

UtilityProfile SupportingProfiles::at(std::uint64_t index) const {
  const auto d = digits(index);
  std::vector<WeakOrder> orders;
  for (std::size_t i = 0; i < d.size(); ++i) orders.push_back(choices_[i][d[i]]);
  return UtilityProfile::ordinal(std::move(orders));
}

void for_each_supporting_profile(
    const GameFrame& frame, const Objective& goal, const DefenderSet& defenders,
    const std::function<void(const UtilityProfile&)>& visit) {
  SupportingProfiles profiles(frame, goal, defenders);
  for (std::uint64_t k = 0; k < profiles.size(); ++k) visit(profiles.at(k));
}

StrategyProfile apply_permutation(const PermutationProfile& pi,
                                  const StrategyProfile& s) {
  if (pi.size() != s.size()) throw InvalidInput("permutation does not match profile");
  StrategyProfile out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = pi[i].at(s[i]);
  return out;
}

PermutedGame permute(const GameFrame& frame, const UtilityProfile& u,
                     const PermutationProfile& pi) {
  if (pi.size() != frame.num_agents()) {
    throw InvalidInput("permutation does not match the agent count");
  }
  std::vector<std::vector<std::string>> names(frame.num_agents());
  for (std::size_t i = 0; i < pi.size(); ++i) {
    const std::size_t n = frame.num_strategies(i);
    if (pi[i].size() != n) throw InvalidInput("permutation has the wrong length");
    std::vector<bool> hit(n, false);
    names[i].resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (pi[i][k] >= n || hit[pi[i][k]]) {
        throw InvalidInput("strategy permutation is not a bijection");
      }
      hit[pi[i][k]] = true;
      names[i][pi[i][k]] = frame.strategy_name(i, k);
    }
  }
  std::vector<OutcomeId> map(frame.num_profiles());
  for (ProfileIndex p = 0; p < frame.num_profiles(); ++p) {
    ProfileIndex q = 0;
    for (std::size_t i = 0; i < pi.size(); ++i) {
      q += pi[i][frame.strategy_at(p, i)] * frame.stride(i);
    }
    map[q] = frame.outcome_at(p);
  }
  return {GameFrame(frame.agent_names(), std::move(names), frame.outcome_names(),
                    std::move(map)),
          u};
}

}  // namespace protodef
