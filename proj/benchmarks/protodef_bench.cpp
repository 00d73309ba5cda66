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

#include <benchmark/benchmark.h>

#include <random>

#include "protodef/defend.hpp"
#include "protodef/devgraph.hpp"
#include "protodef/mixed.hpp"
#include "protodef/protocol.hpp"
#include "protodef/solution.hpp"

using namespace protodef;

namespace {

UtilityProfile random_cardinal(std::size_t agents, std::size_t m, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> value(0, 99);
  std::vector<CardinalUtility> values(agents);
  for (auto& row : values) {
    for (std::size_t w = 0; w < m; ++w) row.push_back(Rational(value(rng)));
  }
  return UtilityProfile::cardinal(values);
}

void BM_WeakOrderEnumeration(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t n = 0;
    for_each_weak_order(m, [&](const WeakOrder&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_WeakOrderEnumeration)->DenseRange(3, 7);

void BM_PureNash(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const GameFrame f = GameFrame::injective({k, k, k});
  const auto u = random_cardinal(3, f.num_outcomes(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(pure_nash(f, u));
}
BENCHMARK(BM_PureNash)->RangeMultiplier(2)->Range(2, 16);

void BM_Oracle(benchmark::State& state) {
  const GameFrame f = GameFrame::injective({2, 3});
  const Objective goal(6, {0, 1, 4});
  OracleOptions opts;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        defendable_oracle(f, goal, DefenderSet::full(2), SolutionConceptId::kNE, opts));
  }
}
BENCHMARK(BM_Oracle)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_MixedNash(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const GameFrame f = GameFrame::injective({k, k});
  const auto u = random_cardinal(2, f.num_outcomes(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(mixed_nash_2p(f, u));
}
BENCHMARK(BM_MixedNash)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

void BM_DevGraph(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const GameFrame f = GameFrame::injective({k, k, k});
  for (auto _ : state) {
    const DevGraph g = DevGraph::build(f);
    benchmark::DoNotOptimize(knot_free_component_exists(g));
  }
}
BENCHMARK(BM_DevGraph)->RangeMultiplier(2)->Range(2, 16);

void BM_CompileProtocol(benchmark::State& state) {
  const ProtocolTree t = asw_model(state.range(0) != 0);
  for (auto _ : state) benchmark::DoNotOptimize(to_frame(t));
}
BENCHMARK(BM_CompileProtocol)->Arg(1)->Arg(0);

}  // namespace

BENCHMARK_MAIN();
