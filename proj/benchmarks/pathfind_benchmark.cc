// Copyright 2026 The Stegnet Authors
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


#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "stegnet/graph.h"
#include "stegnet/pathfind.h"

namespace stegnet {
namespace {

// Random connected risk graph with weights in [1, 10).
Graph WeightedGraph(int n, std::int64_t m, std::uint64_t seed) {
  const Graph topology = GenerateRandomGraph(n, m, seed);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(1.0, 10.0);
  std::vector<Edge> edges(topology.edges().begin(), topology.edges().end());
  for (Edge& e : edges) e.value = weight(rng);
  return Graph::Create(n, EdgeMode::kRisk, std::move(edges));
}

void BM_Dijkstra(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = WeightedGraph(n, 4LL * n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Dijkstra(g, 0, n - 1));
  }
}
BENCHMARK(BM_Dijkstra)->RangeMultiplier(4)->Range(64, 16384);

void BM_MinVertexShortestPath(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = WeightedGraph(n, 4LL * n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(MinVertexShortestPath(g, 0, n - 1));
  }
}
BENCHMARK(BM_MinVertexShortestPath)->RangeMultiplier(4)->Range(64, 16384);

void BM_AllPairsDistances(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = WeightedGraph(n, 3LL * n, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(AllPairsDistances(g));
  }
}
BENCHMARK(BM_AllPairsDistances)->RangeMultiplier(2)->Range(16, 256);

}  // namespace
}  // namespace stegnet
