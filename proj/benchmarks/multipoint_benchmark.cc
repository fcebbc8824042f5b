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

#include <numeric>
#include <vector>

#include "stegnet/graph.h"
#include "stegnet/multipoint.h"

namespace stegnet {
namespace {

std::vector<VertexId> SpreadTerminals(int n, int k) {
  std::vector<VertexId> terminals;
  for (int i = 0; i < k; ++i) terminals.push_back(static_cast<VertexId>(1LL * i * n / k));
  return terminals;
}

void BM_SteinerApprox(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const Graph g = GenerateRandomGraph(n, 4LL * n, 7);
  const std::vector<VertexId> terminals = SpreadTerminals(n, k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SteinerApprox(g, terminals));
  }
}
BENCHMARK(BM_SteinerApprox)
    ->ArgsProduct({{256, 1024, 4096}, {4, 16, 64}});

void BM_SteinerExactSmall(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = GenerateRandomGraph(n, 2LL * n, 8);
  const std::vector<VertexId> terminals = SpreadTerminals(n, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SteinerExactSmall(g, terminals));
  }
}
BENCHMARK(BM_SteinerExactSmall)->DenseRange(8, 14, 2);

void BM_SolveMultipoint(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = GenerateRandomGraph(n, 4LL * n, 9);
  CommTask task;
  for (int i = 0; i < 8; ++i) {
    task.encoders.push_back(static_cast<VertexId>(i));
    task.decoder_sets.push_back({static_cast<VertexId>(n - 1 - i),
                                 static_cast<VertexId>(n / 2 + i)});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveMultipoint(g, task));
  }
}
BENCHMARK(BM_SolveMultipoint)->RangeMultiplier(4)->Range(256, 4096);

}  // namespace
}  // namespace stegnet
