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

#ifndef STEGNET_DETECT_H_
#define STEGNET_DETECT_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stegnet/graph.h"

namespace stegnet {

// Structural attack on a communication graph. An edge's support count is
// the number of unordered vertex pairs having at least one shortest path
// through it; its path-support rate (PSR) is that count normalised over all
// edges. The attacker watches the highest-PSR edges, and the path-hit rate
// (PHR) is the share of random shortest-path conversations that cross a
// watched edge.

struct EdgeSupport {
  Edge edge;
  std::int64_t delta = 0;
  double psr = 0.0;
};

// Rows follow Graph::edges() order.
struct PsrTable {
  std::vector<EdgeSupport> rows;
};

// Support counts; psr left at 0. An edge (u, v) with weight w supports the
// pair (i, j) when d(i,u) + w + d(v,j) or d(i,v) + w + d(u,j) equals d(i,j)
// under RiskEqual. Requires a connected risk graph (InfeasibleError
// otherwise).
PsrTable EdgeSupportCounts(const Graph& graph);

// Fills psr = delta / sum(delta); all zeros when the sum is zero.
PsrTable PathSupportRates(PsrTable counts);

// Row indices ordered by psr descending, then (u, v) ascending.
std::vector<int> RankBySupport(const PsrTable& table);

// Number of watched edges for a given edge-selection rate:
// round-half-up(esr * num_edges).
int AttackSize(double esr, int num_edges);

struct AttackSet {
  std::vector<Edge> edges;  // sorted by (u, v)
  double esr = 0.0;         // |edges| / |E|
};

// The top AttackSize(esr, |E|) edges under RankBySupport. Sets for larger
// rates are supersets of sets for smaller ones. Throws std::invalid_argument
// if esr is outside [0, 1].
AttackSet SelectAttackSet(const PsrTable& table, double esr);

using VertexPair = std::pair<VertexId, VertexId>;

// `trials` unordered pairs of distinct vertices, uniform, first < second.
// Deterministic in (num_vertices, trials, seed).
std::vector<VertexPair> SampleVertexPairs(int num_vertices, int trials,
                                          std::uint64_t seed);

// Share of `pairs` whose BFS shortest path uses an edge of `attack`.
double PathHitRate(const Graph& graph, const AttackSet& attack,
                   std::span<const VertexPair> pairs);

// PathHitRate over SampleVertexPairs(n, trials, seed). Throws
// std::invalid_argument if n < 2 or trials < 1.
double SimulatePhr(const Graph& graph, const AttackSet& attack, int trials,
                   std::uint64_t seed);

struct PhrPoint {
  double esr = 0.0;
  double phr = 0.0;
};

struct PhrCurve {
  std::vector<PhrPoint> points;
  int n = 0;
  std::int64_t m = 0;
  int trials = 0;
  std::uint64_t seed = 0;
};

// One random graph from GenerateRandomGraph(n, m, seed), PSR computed once,
// and PHR at every grid rate over one shared set of sampled pairs (the pair
// stream is seeded with seed ^ kPairStreamSalt). Because the attack sets are
// nested and the pairs shared, PHR is non-decreasing along an ascending grid.
PhrCurve PhrCurveExperiment(int n, std::int64_t m, int trials,
                            std::span<const double> esr_grid,
                            std::uint64_t seed);

inline constexpr std::uint64_t kPairStreamSalt = 0x9e3779b97f4a7c15ULL;

// "# key=value" metadata lines, then "esr,phr" and one "%.6f,%.6f" row per
// point.
std::string FormatCurveCsv(const PhrCurve& curve);

// "u,v,delta,psr" rows in RankBySupport order, psr with 6 decimals.
std::string FormatPsrCsv(const PsrTable& table);

}  // namespace stegnet

#endif  // STEGNET_DETECT_H_
