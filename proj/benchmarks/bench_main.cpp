// Copyright 2026 The qroute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qroute/availability.hpp"
#include "qroute/engine.hpp"
#include "qroute/fidelity.hpp"
#include "qroute/pathfind.hpp"
#include "qroute/policy.hpp"
#include "qroute/quality.hpp"
#include "qroute/random.hpp"
#include "qroute/topology.hpp"

#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

namespace {

using namespace qroute;

struct Instance {
  NetworkGraph      graph;
  QualityAssignment quality;
};

// Baseline-sized network: 25 Waxman repeaters, five pairs, xi = 0.8.
Instance make_instance(std::uint64_t seed) {
  RandomStream rng(seed);
  WaxmanParams params;
  auto         graph   = attach_endpoints(generate_waxman(params, rng), 5, rng);
  auto         quality = assign_two_class(graph, 0.8, rng);
  return {std::move(graph), std::move(quality)};
}

void BM_PathFidelity(benchmark::State& state) {
  const auto           inst = make_instance(7);
  const FidelityOracle oracle(inst.quality, {});
  const auto           pair = inst.graph.pairs().front();
  const auto paths = k_shortest_paths(inst.graph, EdgeAvailability(inst.graph),
                                      pair.source, pair.destination, 10);
  for (auto _ : state) {
    double sum = 0;
    for (const auto& p : paths) sum += oracle.exact(p);
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(paths.size()));
}
BENCHMARK(BM_PathFidelity);

void BM_KShortestPaths(benchmark::State& state) {
  const auto             inst = make_instance(7);
  const EdgeAvailability available(inst.graph);
  const auto             pair = inst.graph.pairs().front();
  const auto             k    = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        k_shortest_paths(inst.graph, available, pair.source, pair.destination, k));
  }
}
BENCHMARK(BM_KShortestPaths)->Arg(10)->Arg(100);

void BM_RunPeriod(benchmark::State& state) {
  const auto           inst = make_instance(7);
  const FidelityOracle oracle(inst.quality, {});
  const PolicySpec     spec = parse_policy(state.range(0) == 0 ? "sp" : "kx0");
  std::vector<std::size_t> order(inst.graph.pairs().size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  RandomStream rng(11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_period(inst.graph, oracle, spec, order, rng));
  }
  state.SetLabel(spec.name());
}
BENCHMARK(BM_RunPeriod)->Arg(0)->Arg(1);

} // namespace

BENCHMARK_MAIN();
