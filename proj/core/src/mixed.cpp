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

#include "protodef/mixed.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "protodef/error.hpp"

namespace protodef {
namespace {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

struct LinearSolution {
  bool feasible = false;
  std::size_t rank = 0;
  Vec x;  // one solution (free variables at zero)
};

// Gauss-Jordan elimination of [a | b] over the rationals.
LinearSolution solve_linear(Mat a, Vec b, std::size_t vars) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < vars && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t k = c; k < vars; ++k) a[r][k] *= inv;
    b[r] *= inv;
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || a[q][c] == 0) continue;
      const Rational f = a[q][c];
      for (std::size_t k = c; k < vars; ++k) a[q][k] -= f * a[r][k];
      b[q] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  LinearSolution out;
  out.rank = r;
  for (std::size_t q = r; q < rows; ++q) {
    if (b[q] != 0) return out;
  }
  out.feasible = true;
  out.x.assign(vars, Rational(0));
  for (std::size_t q = 0; q < r; ++q) out.x[pivot_col[q]] = b[q];
  return out;
}

// The mixing polytope of one side of a support pair. Variables are the
// probabilities on `own` followed by the opponent's equilibrium value.
// payoff[r][c] is the opponent's payoff when it plays row r against our c.
struct Side {
  std::vector<Vec> points;  // unique solution or polytope vertices
  bool degenerate = false;
};

std::optional<Side> solve_side(const Mat& payoff,
                               const std::vector<std::size_t>& opp_support,
                               const std::vector<std::size_t>& own) {
  const std::size_t k = own.size() + 1;
  const std::size_t v = own.size();
  Mat eq;
  Vec rhs;
  for (std::size_t r : opp_support) {
    Vec row(k, Rational(0));
    for (std::size_t c = 0; c < own.size(); ++c) row[c] = payoff[r][own[c]];
    row[v] = -1;
    eq.push_back(std::move(row));
    rhs.push_back(0);
  }
  {
    Vec row(k, Rational(0));
    for (std::size_t c = 0; c < own.size(); ++c) row[c] = 1;
    eq.push_back(std::move(row));
    rhs.push_back(1);
  }
  // Inequalities g.x <= h: nonnegativity and no profitable row outside the
  // opponent's support.
  Mat ineq;
  Vec ineq_rhs;
  for (std::size_t c = 0; c < own.size(); ++c) {
    Vec row(k, Rational(0));
    row[c] = -1;
    ineq.push_back(std::move(row));
    ineq_rhs.push_back(0);
  }
  for (std::size_t r = 0; r < payoff.size(); ++r) {
    if (std::find(opp_support.begin(), opp_support.end(), r) !=
        opp_support.end()) {
      continue;
    }
    Vec row(k, Rational(0));
    for (std::size_t c = 0; c < own.size(); ++c) row[c] = payoff[r][own[c]];
    row[v] = -1;
    ineq.push_back(std::move(row));
    ineq_rhs.push_back(0);
  }
  auto satisfies = [&](const Vec& x) {
    for (std::size_t q = 0; q < ineq.size(); ++q) {
      Rational s = 0;
      for (std::size_t c = 0; c < k; ++c) s += ineq[q][c] * x[c];
      if (s > ineq_rhs[q]) return false;
    }
    return true;
  };

  const auto base = solve_linear(eq, rhs, k);
  if (!base.feasible) return std::nullopt;
  Side side;
  if (base.rank == k) {
    for (std::size_t c = 0; c < own.size(); ++c) {
      if (base.x[c] <= 0) return std::nullopt;
    }
    if (!satisfies(base.x)) return std::nullopt;
    side.points.push_back(base.x);
    return side;
  }

  // A face of positive dimension: collect its vertices by making
  // (k - rank) further inequalities tight.
  side.degenerate = true;
  const std::size_t need = k - base.rank;
  std::vector<std::size_t> pick(need);
  auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
    if (depth == need) {
      Mat a = eq;
      Vec b = rhs;
      for (std::size_t q : pick) {
        a.push_back(ineq[q]);
        b.push_back(ineq_rhs[q]);
      }
      const auto s = solve_linear(std::move(a), std::move(b), k);
      if (s.feasible && s.rank == k && satisfies(s.x) &&
          std::find(side.points.begin(), side.points.end(), s.x) ==
              side.points.end()) {
        side.points.push_back(s.x);
      }
      return;
    }
    for (std::size_t q = start; q < ineq.size(); ++q) {
      pick[depth] = q;
      self(self, q + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  if (side.points.empty()) return std::nullopt;
  std::sort(side.points.begin(), side.points.end());
  return side;
}

Vec barycenter(const std::vector<Vec>& points) {
  Vec c(points.front().size(), Rational(0));
  for (const auto& p : points) {
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += p[k];
  }
  for (auto& x : c) x /= static_cast<long>(points.size());
  return c;
}

std::vector<std::size_t> mask_members(std::size_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n; ++k) {
    if (mask >> k & 1u) out.push_back(k);
  }
  return out;
}

Vec spread(const Vec& point, const std::vector<std::size_t>& own,
           std::size_t n) {
  Vec p(n, Rational(0));
  for (std::size_t c = 0; c < own.size(); ++c) p[own[c]] = point[c];
  return p;
}

}  // namespace

std::vector<MixedEquilibrium> mixed_nash_2p(const GameFrame& frame,
                                            const UtilityProfile& u,
                                            const MixedNashOptions& opts) {
  if (frame.num_agents() != 2) {
    throw UnsupportedOperation("mixed equilibria are computed for two agents only");
  }
  u.validate(frame);
  if (!u.is_cardinal()) {
    throw InvalidInput("mixed equilibria need cardinal utilities");
  }
  const std::size_t m = frame.num_strategies(0);
  const std::size_t n = frame.num_strategies(1);
  if (m >= 63 || n >= 63 ||
      ((std::uint64_t{1} << m) - 1) > opts.max_support_pairs /
                                          ((std::uint64_t{1} << n) - 1)) {
    throw ResourceLimit("too many support pairs", opts.max_support_pairs);
  }
  // a[i][j], b[i][j]: payoffs of agents 0 and 1.
  Mat a(m, Vec(n)), b(m, Vec(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const OutcomeId w = frame.outcome_at(i * frame.stride(0) + j * frame.stride(1));
      a[i][j] = u.value(0, w);
      b[i][j] = u.value(1, w);
    }
  }
  Mat bt(n, Vec(m));  // agent 1's payoff indexed [own j][opponent i]
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) bt[j][i] = b[i][j];
  }

  std::vector<MixedEquilibrium> out;
  for (std::size_t mi = 1; mi < (std::size_t{1} << m); ++mi) {
    const auto rows = mask_members(mi, m);
    for (std::size_t mj = 1; mj < (std::size_t{1} << n); ++mj) {
      const auto cols = mask_members(mj, n);
      // Agent 1 mixes over cols so that agent 0 is indifferent on rows.
      const auto ys = solve_side(a, rows, cols);
      if (!ys) continue;
      const auto xs = solve_side(bt, cols, rows);
      if (!xs) continue;
      const Vec xc = barycenter(xs->points);
      const Vec yc = barycenter(ys->points);
      bool exact = true;
      for (std::size_t c = 0; c < rows.size(); ++c) exact = exact && xc[c] > 0;
      for (std::size_t c = 0; c < cols.size(); ++c) exact = exact && yc[c] > 0;
      if (!exact) continue;
      MixedEquilibrium eq;
      eq.profile = MixedProfile({spread(xc, rows, m), spread(yc, cols, n)});
      eq.degenerate = xs->degenerate || ys->degenerate;
      if (eq.degenerate) {
        for (const auto& x : xs->points) {
          for (const auto& y : ys->points) {
            eq.vertices.emplace_back(std::vector<Vec>{spread(x, rows, m),
                                                      spread(y, cols, n)});
          }
        }
      }
      const bool seen = std::any_of(out.begin(), out.end(), [&](const auto& e) {
        return e.profile == eq.profile;
      });
      if (!seen) out.push_back(std::move(eq));
    }
  }
  return out;
}

std::vector<Rational> expected_utilities(const GameFrame& frame,
                                         const UtilityProfile& u,
                                         const MixedProfile& mp) {
  u.validate(frame);
  std::vector<Rational> total(frame.num_agents(), Rational(0));
  for (ProfileIndex p : mp.support_profiles(frame)) {
    Rational weight = 1;
    for (std::size_t i = 0; i < frame.num_agents(); ++i) {
      weight *= mp.probability(i, frame.strategy_at(p, i));
    }
    const OutcomeId w = frame.outcome_at(p);
    for (std::size_t i = 0; i < frame.num_agents(); ++i) {
      total[i] += weight * u.value(i, w);
    }
  }
  return total;
}

Rational expected_utility_against(const GameFrame& frame,
                                  const UtilityProfile& u,
                                  const MixedProfile& mp, std::size_t agent,
                                  std::size_t k) {
  std::vector<std::vector<Rational>> dist;
  for (std::size_t i = 0; i < mp.num_agents(); ++i) dist.push_back(mp.agent(i));
  if (agent >= dist.size() || k >= dist[agent].size()) {
    throw InvalidInput("strategy out of range");
  }
  dist[agent].assign(dist[agent].size(), Rational(0));
  dist[agent][k] = 1;
  return expected_utilities(frame, u, MixedProfile(std::move(dist)))[agent];
}

std::vector<MixedEquilibrium> optimal_mixed(
    const GameFrame& frame, const UtilityProfile& u,
    std::vector<MixedEquilibrium> equilibria) {
  std::vector<std::vector<Rational>> value;
  for (const auto& e : equilibria) {
    value.push_back(expected_utilities(frame, u, e.profile));
  }
  std::vector<MixedEquilibrium> out;
  for (std::size_t k = 0; k < equilibria.size(); ++k) {
    bool dominated = false;
    for (std::size_t l = 0; l < equilibria.size() && !dominated; ++l) {
      bool all = true;
      for (std::size_t i = 0; i < value[k].size() && all; ++i) {
        all = value[l][i] > value[k][i];
      }
      dominated = all;
    }
    if (!dominated) out.push_back(std::move(equilibria[k]));
  }
  return out;
}

}  // namespace protodef
