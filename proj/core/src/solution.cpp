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

#include "protodef/solution.hpp"

#include <algorithm>
#include <cctype>

#include "protodef/error.hpp"

namespace protodef {

std::string to_string(SolutionConceptId id) {
  switch (id) {
    case SolutionConceptId::kNE: return "NE";
    case SolutionConceptId::kOptNE: return "OPTNE";
    case SolutionConceptId::kUndom: return "UNDOM";
    case SolutionConceptId::kPO: return "PO";
  }
  throw InvalidInput("unknown solution concept");
}

SolutionConceptId parse_solution_concept(std::string_view text) {
  std::string t(text);
  for (char& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "ne" || t == "nash") return SolutionConceptId::kNE;
  if (t == "optne" || t == "opt-ne" || t == "optimal-ne") {
    return SolutionConceptId::kOptNE;
  }
  if (t == "undom" || t == "undominated") return SolutionConceptId::kUndom;
  if (t == "po" || t == "pareto") return SolutionConceptId::kPO;
  throw InvalidInput("unknown solution concept '" + std::string(text) + "'");
}

bool SolutionSet::contains(ProfileIndex p) const {
  return std::binary_search(profiles.begin(), profiles.end(), p);
}

namespace kernel {
namespace {

template <class V>
void check_table(const GameFrame& frame, Table<V> u) {
  if (u.size() != frame.num_agents()) {
    throw InvalidInput("utility table does not match the agent count");
  }
  for (const auto& row : u) {
    if (row.size() != frame.num_outcomes()) {
      throw InvalidInput("utility table does not match the outcome count");
    }
  }
}

// Calls f(first, stride, count) for each line of `agent`.
template <class F>
void for_each_line(const GameFrame& frame, std::size_t agent, F&& f) {
  const std::size_t st = frame.stride(agent);
  const std::size_t n = frame.num_strategies(agent);
  const std::size_t block = st * n;
  for (std::size_t hi = 0; hi < frame.num_profiles(); hi += block) {
    for (std::size_t lo = 0; lo < st; ++lo) f(hi + lo, st, n);
  }
}

template <class V>
bool strongly_dominates(Table<V> u, OutcomeId a, OutcomeId b) {
  for (const auto& row : u) {
    if (!(row[a] > row[b])) return false;
  }
  return true;
}

}  // namespace

template <class V>
std::vector<ProfileIndex> nash(const GameFrame& frame, Table<V> u) {
  check_table(frame, u);
  std::vector<char> stable(frame.num_profiles(), 1);
  for (std::size_t i = 0; i < frame.num_agents(); ++i) {
    const auto& row = u[i];
    for_each_line(frame, i, [&](std::size_t first, std::size_t st, std::size_t n) {
      const V* best = &row[frame.outcome_at(first)];
      for (std::size_t k = 1; k < n; ++k) {
        const V& v = row[frame.outcome_at(first + k * st)];
        if (v > *best) best = &v;
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (row[frame.outcome_at(first + k * st)] < *best) stable[first + k * st] = 0;
      }
    });
  }
  std::vector<ProfileIndex> out;
  for (ProfileIndex p = 0; p < stable.size(); ++p) {
    if (stable[p]) out.push_back(p);
  }
  return out;
}

template <class V>
std::vector<ProfileIndex> optimal_nash(const GameFrame& frame, Table<V> u) {
  const auto ne = nash(frame, u);
  // Distinct equilibrium outcomes are enough to decide domination.
  std::vector<OutcomeId> outs;
  for (ProfileIndex p : ne) outs.push_back(frame.outcome_at(p));
  std::sort(outs.begin(), outs.end());
  outs.erase(std::unique(outs.begin(), outs.end()), outs.end());
  std::vector<ProfileIndex> out;
  for (ProfileIndex p : ne) {
    const OutcomeId w = frame.outcome_at(p);
    const bool dominated = std::any_of(outs.begin(), outs.end(), [&](OutcomeId x) {
      return strongly_dominates(u, x, w);
    });
    if (!dominated) out.push_back(p);
  }
  return out;
}

template <class V>
std::vector<ProfileIndex> undominated(const GameFrame& frame, Table<V> u) {
  check_table(frame, u);
  const std::size_t n_agents = frame.num_agents();
  std::vector<std::vector<char>> keep(n_agents);
  for (std::size_t i = 0; i < n_agents; ++i) {
    const std::size_t n = frame.num_strategies(i);
    const std::size_t st = frame.stride(i);
    // ge[a][b]: a at least as good as b everywhere; gt[a][b]: somewhere better.
    std::vector<char> ge(n * n, 1), gt(n * n, 0);
    for_each_line(frame, i, [&](std::size_t first, std::size_t, std::size_t) {
      for (std::size_t a = 0; a < n; ++a) {
        const V& va = u[i][frame.outcome_at(first + a * st)];
        for (std::size_t b = 0; b < n; ++b) {
          const V& vb = u[i][frame.outcome_at(first + b * st)];
          if (va < vb) ge[a * n + b] = 0;
          if (va > vb) gt[a * n + b] = 1;
        }
      }
    });
    keep[i].assign(n, 1);
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t a = 0; a < n; ++a) {
        if (a != b && ge[a * n + b] && gt[a * n + b]) keep[i][b] = 0;
      }
    }
  }
  std::vector<ProfileIndex> out;
  for (ProfileIndex p = 0; p < frame.num_profiles(); ++p) {
    bool ok = true;
    for (std::size_t i = 0; i < n_agents && ok; ++i) {
      ok = keep[i][frame.strategy_at(p, i)] != 0;
    }
    if (ok) out.push_back(p);
  }
  return out;
}

template <class V>
std::vector<ProfileIndex> pareto_optimal(const GameFrame& frame, Table<V> u) {
  check_table(frame, u);
  const std::size_t m = frame.num_outcomes();
  std::vector<char> dominated(m, 0);
  for (OutcomeId w = 0; w < m; ++w) {
    for (OutcomeId x = 0; x < m && !dominated[w]; ++x) {
      if (x != w && strongly_dominates(u, x, w)) dominated[w] = 1;
    }
  }
  std::vector<ProfileIndex> out;
  for (ProfileIndex p = 0; p < frame.num_profiles(); ++p) {
    if (!dominated[frame.outcome_at(p)]) out.push_back(p);
  }
  return out;
}

template <class V>
std::vector<ProfileIndex> solve(SolutionConceptId sc, const GameFrame& frame,
                                Table<V> u) {
  switch (sc) {
    case SolutionConceptId::kNE: return nash(frame, u);
    case SolutionConceptId::kOptNE: return optimal_nash(frame, u);
    case SolutionConceptId::kUndom: return undominated(frame, u);
    case SolutionConceptId::kPO: return pareto_optimal(frame, u);
  }
  throw InvalidInput("unknown solution concept");
}

template <class V>
bool correct(SolutionConceptId sc, const GameFrame& frame, Table<V> u,
             const Objective& goal, ProfileIndex* offending) {
  const auto sol = solve(sc, frame, u);
  if (sol.empty()) return goal.is_full();
  for (ProfileIndex p : sol) {
    if (!goal.contains(frame.outcome_at(p))) {
      if (offending != nullptr) *offending = p;
      return false;
    }
  }
  return true;
}

#define PROTODEF_INSTANTIATE(V)                                               \
  template std::vector<ProfileIndex> nash<V>(const GameFrame&, Table<V>);    \
  template std::vector<ProfileIndex> optimal_nash<V>(const GameFrame&,       \
                                                     Table<V>);              \
  template std::vector<ProfileIndex> undominated<V>(const GameFrame&,        \
                                                    Table<V>);               \
  template std::vector<ProfileIndex> pareto_optimal<V>(const GameFrame&,     \
                                                       Table<V>);            \
  template std::vector<ProfileIndex> solve<V>(SolutionConceptId,             \
                                              const GameFrame&, Table<V>);   \
  template bool correct<V>(SolutionConceptId, const GameFrame&, Table<V>,    \
                           const Objective&, ProfileIndex*);

PROTODEF_INSTANTIATE(int)
PROTODEF_INSTANTIATE(Rational)
#undef PROTODEF_INSTANTIATE

}  // namespace kernel

namespace {

template <class F>
SolutionSet dispatch(const GameFrame& frame, const UtilityProfile& u, F&& f) {
  u.validate(frame);
  if (u.is_ordinal()) {
    const auto t = u.rank_table();
    return {f(std::span<const std::vector<int>>(t))};
  }
  const auto t = u.value_table();
  return {f(std::span<const std::vector<Rational>>(t))};
}

}  // namespace

SolutionSet pure_nash(const GameFrame& frame, const UtilityProfile& u) {
  return dispatch(frame, u, [&](auto t) { return kernel::nash(frame, t); });
}

SolutionSet optimal_nash(const GameFrame& frame, const UtilityProfile& u) {
  return dispatch(frame, u, [&](auto t) { return kernel::optimal_nash(frame, t); });
}

SolutionSet undominated_profiles(const GameFrame& frame,
                                 const UtilityProfile& u) {
  return dispatch(frame, u, [&](auto t) { return kernel::undominated(frame, t); });
}

SolutionSet pareto_optimal_profiles(const GameFrame& frame,
                                    const UtilityProfile& u) {
  return dispatch(frame, u,
                  [&](auto t) { return kernel::pareto_optimal(frame, t); });
}

SolutionSet solve(SolutionConceptId sc, const GameFrame& frame,
                  const UtilityProfile& u) {
  return dispatch(frame, u, [&](auto t) { return kernel::solve(sc, frame, t); });
}

Objective outcomes_of(const GameFrame& frame, const SolutionSet& set) {
  return objective_of_profiles(frame, set.profiles);
}

}  // namespace protodef
