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

#include "protodef/defend.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "protodef/devgraph.hpp"
#include "protodef/error.hpp"
#include "protodef/mixed.hpp"

namespace protodef {
namespace {

void check_goal(const GameFrame& frame, const Objective& goal) {
  if (goal.universe() != frame.num_outcomes()) {
    throw InvalidInput("objective does not match the outcome set");
  }
}

void check_defenders(const GameFrame& frame, const DefenderSet& d) {
  if (d.universe() != frame.num_agents()) {
    throw InvalidInput("defender set does not match the agent set");
  }
}

void require_nontrivial(const GameFrame& frame, const Objective& goal) {
  if (!is_nontrivial(frame, goal)) {
    throw InvalidInput("characterizations need a nontrivial objective");
  }
}

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kChunk = 4096;

// Scans [lo, hi) and returns the first failing index, or kNone. Stops early
// once `best` drops to or below the current position.
std::uint64_t scan(const GameFrame& frame, const SupportingProfiles& sp,
                   SolutionConceptId sc, const Objective& goal,
                   std::uint64_t lo, std::uint64_t hi,
                   const std::atomic<std::uint64_t>& best) {
  const std::size_t n = sp.num_agents();
  auto digit = sp.digits(lo);
  std::vector<std::vector<int>> table(n);
  for (std::size_t i = 0; i < n; ++i) table[i] = sp.choice(i, digit[i]).ranks();
  const std::span<const std::vector<int>> view(table);
  for (std::uint64_t k = lo; k < hi; ++k) {
    if ((k & 1023u) == 0 && best.load(std::memory_order_relaxed) <= k) {
      return kNone;
    }
    if (!kernel::correct(sc, frame, view, goal)) return k;
    // Advance the odometer, last agent fastest.
    for (std::size_t i = n; i-- > 0;) {
      if (++digit[i] < sp.choices(i)) {
        table[i] = sp.choice(i, digit[i]).ranks();
        break;
      }
      digit[i] = 0;
      table[i] = sp.choice(i, 0).ranks();
    }
  }
  return kNone;
}

std::uint64_t first_failure(const GameFrame& frame, const SupportingProfiles& sp,
                            SolutionConceptId sc, const Objective& goal,
                            std::uint64_t limit, unsigned threads) {
  std::atomic<std::uint64_t> best{kNone};
  if (threads <= 1 || limit <= kChunk) {
    return scan(frame, sp, sc, goal, 0, limit, best);
  }
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t lo = next.fetch_add(kChunk);
      if (lo >= limit || lo >= best.load()) return;
      const std::uint64_t hi = std::min(limit, lo + kChunk);
      const std::uint64_t f = scan(frame, sp, sc, goal, lo, hi, best);
      if (f == kNone) continue;
      std::uint64_t cur = best.load();
      while (f < cur && !best.compare_exchange_weak(cur, f)) {
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return best.load();
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::kOracle: return "oracle";
    case Method::kCharacterization: return "characterization";
    case Method::kExperimental: return "experimental";
  }
  return "unknown";
}

bool is_correct(const GameFrame& frame, const UtilityProfile& u,
                SolutionConceptId sc, const Objective& goal) {
  check_goal(frame, goal);
  const auto sol = solve(sc, frame, u);
  if (sol.empty()) return goal.is_full();
  return outcomes_of(frame, sol).is_subset_of(goal);
}

bool is_correct_mixed(const GameFrame& frame, const UtilityProfile& u,
                      const Objective& goal) {
  check_goal(frame, goal);
  const auto eqs = mixed_nash_2p(frame, u);
  if (eqs.empty()) return goal.is_full();
  for (const auto& e : eqs) {
    for (ProfileIndex p : e.profile.support_profiles(frame)) {
      if (!goal.contains(frame.outcome_at(p))) return false;
    }
  }
  return true;
}

Verdict defendable_oracle(const GameFrame& frame, const Objective& goal,
                          const DefenderSet& defenders, SolutionConceptId sc,
                          const OracleOptions& opts) {
  check_goal(frame, goal);
  check_defenders(frame, defenders);
  Verdict v;
  v.method = Method::kOracle;
  if (goal.is_full()) {
    v.holds = true;
    return v;
  }
  const SupportingProfiles sp(frame, goal, defenders, opts.strict);
  const std::uint64_t total = sp.size();
  const std::uint64_t cap = opts.budget / frame.num_profiles();
  const std::uint64_t limit = std::min(total, cap);
  const std::uint64_t fail =
      first_failure(frame, sp, sc, goal, limit, std::max(1u, opts.threads));
  if (fail != kNone) {
    Witness w;
    w.index = fail;
    w.utilities = sp.at(fail);
    const auto t = w.utilities.rank_table();
    ProfileIndex p = 0;
    if (!kernel::correct(sc, frame, std::span<const std::vector<int>>(t), goal,
                         &p)) {
      if (!solve(sc, frame, w.utilities).empty()) w.offending = p;
    }
    v.holds = false;
    v.witness = std::move(w);
    v.profiles_checked = fail + 1;
    return v;
  }
  if (total > cap) {
    throw ResourceLimit(
        "oracle needs " +
            (total == kNone ? std::string("more than 2^64")
                            : std::to_string(total)) +
            " utility profiles x " + std::to_string(frame.num_profiles()) +
            " strategy profiles",
        opts.budget);
  }
  v.holds = true;
  v.profiles_checked = total;
  return v;
}

Verdict valid(const GameFrame& frame, const Objective& goal,
              SolutionConceptId sc, const OracleOptions& opts) {
  return defendable_oracle(frame, goal, DefenderSet(frame.num_agents()), sc,
                           opts);
}

bool replay_witness(const GameFrame& frame, const Objective& goal,
                    const DefenderSet& defenders, SolutionConceptId sc,
                    const Witness& w) {
  w.utilities.validate(frame);
  if (!supports(defenders, w.utilities, goal)) return false;
  const auto sol = solve(sc, frame, w.utilities);
  if (w.offending) {
    return sol.contains(*w.offending) &&
           !goal.contains(frame.outcome_at(*w.offending));
  }
  return sol.empty() && !goal.is_full();
}

std::vector<ProfileIndex> deviation_closure(
    const GameFrame& frame, const std::vector<ProfileIndex>& profiles) {
  std::vector<char> in(frame.num_profiles(), 0);
  for (ProfileIndex p : profiles) {
    if (p >= frame.num_profiles()) throw InvalidInput("profile index out of range");
    for (std::size_t i = 0; i < frame.num_agents(); ++i) {
      const std::size_t st = frame.stride(i);
      const ProfileIndex first = p - frame.strategy_at(p, i) * st;
      for (std::size_t k = 0; k < frame.num_strategies(i); ++k) {
        in[first + k * st] = 1;
      }
    }
  }
  std::vector<ProfileIndex> out;
  for (ProfileIndex p = 0; p < in.size(); ++p) {
    if (in[p]) out.push_back(p);
  }
  return out;
}

bool defendable_NE_characterization(const GameFrame& frame,
                                    const Objective& goal) {
  require_nontrivial(frame, goal);
  const DevGraph g = DevGraph::build(frame);
  return neighborhood(g, goal).is_full() &&
         knot_free_component_exists(g.restrict(goal));
}

bool defendable_OptNE_characterization(const GameFrame& frame,
                                       const Objective& goal) {
  require_nontrivial(frame, goal);
  return knot_free_component_exists(DevGraph::build(frame).restrict(goal));
}

bool defendable_experimental(const GameFrame& frame, const Objective& goal,
                             SolutionConceptId sc) {
  require_nontrivial(frame, goal);
  if (sc != SolutionConceptId::kNE && sc != SolutionConceptId::kOptNE) {
    throw UnsupportedOperation("the experimental method covers NE and OPTNE only");
  }
  const auto pre = preimage(frame, goal);
  if (sc == SolutionConceptId::kNE &&
      deviation_closure(frame, pre).size() != frame.num_profiles()) {
    return false;
  }
  // Berge-acyclicity of the profile lines inside the preimage. Profiles
  // are numbered by position in `pre`, lines follow them.
  std::vector<std::size_t> pos(frame.num_profiles(), kNone);
  for (std::size_t k = 0; k < pre.size(); ++k) pos[pre[k]] = k;
  std::vector<std::vector<std::size_t>> lines;
  for (std::size_t i = 0; i < frame.num_agents(); ++i) {
    const std::size_t st = frame.stride(i);
    for (ProfileIndex first = 0; first < frame.num_profiles(); ++first) {
      if (frame.strategy_at(first, i) != 0) continue;
      std::vector<std::size_t> line;
      bool mixed_outcomes = false;
      for (std::size_t k = 0; k < frame.num_strategies(i); ++k) {
        const ProfileIndex p = first + k * st;
        if (pos[p] == kNone) continue;
        if (!line.empty() &&
            frame.outcome_at(p) != frame.outcome_at(pre[line.front()])) {
          mixed_outcomes = true;
        }
        line.push_back(pos[p]);
      }
      if (line.size() >= 2 && mixed_outcomes) lines.push_back(std::move(line));
    }
  }
  std::vector<std::size_t> parent(pre.size() + lines.size());
  for (std::size_t k = 0; k < parent.size(); ++k) parent[k] = k;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t l = 0; l < lines.size(); ++l) {
    for (std::size_t v : lines[l]) {
      const std::size_t a = find(v), b = find(pre.size() + l);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::size_t> nodes(parent.size(), 0), inc(parent.size(), 0);
  for (std::size_t v = 0; v < pre.size(); ++v) ++nodes[find(v)];
  for (std::size_t l = 0; l < lines.size(); ++l) {
    const std::size_t r = find(pre.size() + l);
    ++nodes[r];
    inc[r] += lines[l].size();
  }
  for (std::size_t r = 0; r < parent.size(); ++r) {
    if (nodes[r] > 0 && inc[r] + 1 == nodes[r]) return true;
  }
  return false;
}

bool defendable_mixed_NE(const GameFrame& frame, const Objective& goal) {
  check_goal(frame, goal);
  return goal.is_full();
}

std::optional<ProductDecomposition> product_decomposition(
    const GameFrame& frame, const Objective& goal) {
  check_goal(frame, goal);
  const auto pre = preimage(frame, goal);
  if (pre.empty()) return std::nullopt;
  ProductDecomposition chi(frame.num_agents());
  std::size_t product = 1;
  for (std::size_t i = 0; i < frame.num_agents(); ++i) {
    for (ProfileIndex p : pre) chi[i].push_back(frame.strategy_at(p, i));
    std::sort(chi[i].begin(), chi[i].end());
    chi[i].erase(std::unique(chi[i].begin(), chi[i].end()), chi[i].end());
    product *= chi[i].size();
  }
  // pre is contained in the product, so equal sizes mean equal sets.
  if (product != pre.size()) return std::nullopt;
  return chi;
}

bool defendable_mixed_OptNE(const GameFrame& frame, const Objective& goal) {
  return product_decomposition(frame, goal).has_value();
}

SecurityLevel security_level(const GameFrame& frame, const Objective& goal,
                             SolutionConceptId sc, const OracleOptions& opts) {
  check_goal(frame, goal);
  const std::size_t n = frame.num_agents();
  SecurityLevel level;
  std::vector<std::size_t> pick;
  for (std::size_t k = 0; k <= n; ++k) {
    pick.resize(k);
    for (std::size_t j = 0; j < k; ++j) pick[j] = j;
    for (;;) {
      DefenderSet d(n);
      for (std::size_t a : pick) d.insert(a);
      const bool covered =
          std::any_of(level.members.begin(), level.members.end(),
                      [&](const DefenderSet& m) { return m.is_subset_of(d); });
      if (!covered) {
        ++level.oracle_calls;
        if (defendable_oracle(frame, goal, d, sc, opts).holds) {
          level.members.push_back(d);
        }
      }
      // Next k-combination in lexicographic order.
      std::size_t j = k;
      while (j > 0 && pick[j - 1] == n - k + j - 1) --j;
      if (j == 0) break;
      ++pick[j - 1];
      for (std::size_t l = j; l < k; ++l) pick[l] = pick[l - 1] + 1;
    }
  }
  return level;
}

}  // namespace protodef
