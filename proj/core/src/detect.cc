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

#include "stegnet/detect.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <tuple>

#include <fmt/format.h>

#include "stegnet/errors.h"
#include "stegnet/numeric.h"
#include "stegnet/pathfind.h"

namespace stegnet {
namespace {

void CheckEsr(double esr) {
  if (!(esr >= 0.0 && esr <= 1.0)) {
    throw std::invalid_argument("edge-selection rate must lie in [0, 1]");
  }
}

// For each pair, the best (smallest) support rank among the edges on its BFS
// path. A pair is hit by the top-k attack set iff its value is < k.
std::vector<int> BestRankPerPair(const Graph& graph,
                                 const std::vector<int>& rank_of_edge,
                                 std::span<const VertexPair> pairs) {
  std::vector<int> best;
  best.reserve(pairs.size());
  for (const auto& [s, t] : pairs) {
    const PathResult path = BfsShortestPath(graph, s, t);
    int rank = std::numeric_limits<int>::max();
    for (int index : path.EdgeIndices(graph)) {
      rank = std::min(rank, rank_of_edge[index]);
    }
    best.push_back(rank);
  }
  return best;
}

}  // namespace

PsrTable EdgeSupportCounts(const Graph& graph) {
  if (graph.mode() != EdgeMode::kRisk) {
    throw std::invalid_argument("support counts need a risk graph");
  }
  if (!IsConnected(graph)) {
    throw InfeasibleError("support counts need a connected graph");
  }
  const DistanceMatrix d = AllPairsDistances(graph);
  const int n = graph.num_vertices();
  PsrTable table;
  table.rows.reserve(graph.num_edges());
  for (const Edge& e : graph.edges()) {
    EdgeSupport row{e, 0, 0.0};
    for (VertexId i = 0; i < n; ++i) {
      for (VertexId j = i + 1; j < n; ++j) {
        const double target = d(i, j);
        if (RiskEqual(d(i, e.u) + e.value + d(e.v, j), target) ||
            RiskEqual(d(i, e.v) + e.value + d(e.u, j), target)) {
          ++row.delta;
        }
      }
    }
    table.rows.push_back(row);
  }
  return table;
}

PsrTable PathSupportRates(PsrTable counts) {
  std::int64_t total = 0;
  for (const EdgeSupport& row : counts.rows) total += row.delta;
  for (EdgeSupport& row : counts.rows) {
    row.psr = total > 0 ? static_cast<double>(row.delta) /
                              static_cast<double>(total)
                        : 0.0;
  }
  return counts;
}

std::vector<int> RankBySupport(const PsrTable& table) {
  std::vector<int> order(table.rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const EdgeSupport& x = table.rows[a];
    const EdgeSupport& y = table.rows[b];
    return std::tie(y.psr, x.edge.u, x.edge.v) <
           std::tie(x.psr, y.edge.u, y.edge.v);
  });
  return order;
}

int AttackSize(double esr, int num_edges) {
  CheckEsr(esr);
  const int size =
      static_cast<int>(std::floor(esr * static_cast<double>(num_edges) + 0.5));
  return std::clamp(size, 0, num_edges);
}

AttackSet SelectAttackSet(const PsrTable& table, double esr) {
  const int total = static_cast<int>(table.rows.size());
  const int size = AttackSize(esr, total);
  const std::vector<int> order = RankBySupport(table);
  AttackSet attack;
  for (int k = 0; k < size; ++k) attack.edges.push_back(table.rows[order[k]].edge);
  std::sort(attack.edges.begin(), attack.edges.end(),
            [](const Edge& a, const Edge& b) {
              return std::tie(a.u, a.v) < std::tie(b.u, b.v);
            });
  attack.esr = total > 0 ? static_cast<double>(size) / total : 0.0;
  return attack;
}

std::vector<VertexPair> SampleVertexPairs(int num_vertices, int trials,
                                          std::uint64_t seed) {
  if (num_vertices < 2) {
    throw std::invalid_argument("pair sampling needs at least two vertices");
  }
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> first(0, num_vertices - 1);
  std::uniform_int_distribution<int> second(0, num_vertices - 2);
  std::vector<VertexPair> pairs;
  pairs.reserve(trials);
  for (int i = 0; i < trials; ++i) {
    const VertexId a = first(rng);
    VertexId b = second(rng);
    if (b >= a) ++b;
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  return pairs;
}

double PathHitRate(const Graph& graph, const AttackSet& attack,
                   std::span<const VertexPair> pairs) {
  if (pairs.empty()) throw std::invalid_argument("no pairs to evaluate");
  std::vector<char> watched(graph.num_edges(), 0);
  for (const Edge& e : attack.edges) {
    const auto index = graph.FindEdge(e.u, e.v);
    if (!index) throw std::invalid_argument("attack edge not in graph");
    watched[*index] = 1;
  }
  std::int64_t hits = 0;
  for (const auto& [s, t] : pairs) {
    const PathResult path = BfsShortestPath(graph, s, t);
    for (int index : path.EdgeIndices(graph)) {
      if (watched[index]) {
        ++hits;
        break;
      }
    }
  }
  return static_cast<double>(hits) / static_cast<double>(pairs.size());
}

double SimulatePhr(const Graph& graph, const AttackSet& attack, int trials,
                   std::uint64_t seed) {
  const auto pairs = SampleVertexPairs(graph.num_vertices(), trials, seed);
  return PathHitRate(graph, attack, pairs);
}

PhrCurve PhrCurveExperiment(int n, std::int64_t m, int trials,
                            std::span<const double> esr_grid,
                            std::uint64_t seed) {
  for (double esr : esr_grid) CheckEsr(esr);
  const Graph graph = GenerateRandomGraph(n, m, seed);
  const PsrTable table = PathSupportRates(EdgeSupportCounts(graph));
  const std::vector<int> order = RankBySupport(table);
  std::vector<int> rank_of_edge(order.size());
  for (int r = 0; r < static_cast<int>(order.size()); ++r) {
    rank_of_edge[order[r]] = r;
  }
  const auto pairs = SampleVertexPairs(n, trials, seed ^ kPairStreamSalt);
  const std::vector<int> best_rank = BestRankPerPair(graph, rank_of_edge, pairs);

  PhrCurve curve;
  curve.n = n;
  curve.m = m;
  curve.trials = trials;
  curve.seed = seed;
  for (double esr : esr_grid) {
    const int size = AttackSize(esr, graph.num_edges());
    const auto hits = std::count_if(best_rank.begin(), best_rank.end(),
                                    [size](int rank) { return rank < size; });
    curve.points.push_back(
        {esr, static_cast<double>(hits) / static_cast<double>(trials)});
  }
  return curve;
}

std::string FormatCurveCsv(const PhrCurve& curve) {
  std::string out = fmt::format("# n={}\n# m={}\n# trials={}\n# seed={}\n",
                                curve.n, curve.m, curve.trials, curve.seed);
  out += "esr,phr\n";
  for (const PhrPoint& p : curve.points) {
    out += fmt::format("{:.6f},{:.6f}\n", p.esr, p.phr);
  }
  return out;
}

std::string FormatPsrCsv(const PsrTable& table) {
  std::string out = "u,v,delta,psr\n";
  for (int index : RankBySupport(table)) {
    const EdgeSupport& row = table.rows[index];
    out += fmt::format("{},{},{},{:.6f}\n", row.edge.u, row.edge.v, row.delta,
                       row.psr);
  }
  return out;
}

}  // namespace stegnet
