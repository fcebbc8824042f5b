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

#include <vector>

#include "stegnet/detect.h"
#include "stegnet/graph.h"

namespace stegnet {
namespace {

void BM_EdgeSupportCounts(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = GenerateRandomGraph(n, 3LL * n, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(EdgeSupportCounts(g));
  }
}
BENCHMARK(BM_EdgeSupportCounts)->RangeMultiplier(2)->Range(16, 128);

void BM_PhrCurveExperiment(benchmark::State& state) {
  const int n = 20;
  const auto m = state.range(0);
  const std::vector<double> grid{0.0, 0.1, 0.2, 0.3, 0.4, 0.5,
                                 0.6, 0.7, 0.8, 0.9, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(PhrCurveExperiment(n, m, 2000, grid, 1));
  }
}
BENCHMARK(BM_PhrCurveExperiment)->Arg(30)->Arg(150)->Arg(190)
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace stegnet
