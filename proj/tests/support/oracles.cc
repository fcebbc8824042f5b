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

#include "support/oracles.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "stegnet/numeric.h"

namespace stegnet::testing {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int Find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

std::vector<std::vector<OraclePath>> AllSimplePathsFrom(const Graph& graph,
                                                        VertexId source) {
  std::vector<std::vector<OraclePath>> result(graph.num_vertices());
  OraclePath current;
  current.vertices = {source};
  std::vector<char> on_path(graph.num_vertices(), 0);
  on_path[source] = 1;
  std::function<void(VertexId)> walk = [&](VertexId v) {
    result[v].push_back(current);
    for (const Neighbor& nb : graph.neighbors(v)) {
      if (on_path[nb.vertex]) continue;
      const double w = graph.edge(nb.edge_index).value;
      on_path[nb.vertex] = 1;
      current.vertices.push_back(nb.vertex);
      current.edges.push_back(nb.edge_index);
      current.risk += w;
      ++current.hops;
      walk(nb.vertex);
      --current.hops;
      current.risk -= w;
      current.edges.pop_back();
      current.vertices.pop_back();
      on_path[nb.vertex] = 0;
    }
  };
  walk(source);
  return result;
}

std::vector<OraclePath> MinimumRiskPaths(std::vector<OraclePath> paths) {
  double best = kInf;
  for (const OraclePath& p : paths) best = std::min(best, p.risk);
  std::erase_if(paths,
                [best](const OraclePath& p) { return !RiskEqual(p.risk, best); });
  return paths;
}

std::vector<std::int64_t> BruteForceSupportCounts(const Graph& graph) {
  const int n = graph.num_vertices();
  std::vector<std::int64_t> delta(graph.num_edges(), 0);
  for (VertexId i = 0; i < n; ++i) {
    const auto paths = AllSimplePathsFrom(graph, i);
    for (VertexId j = i + 1; j < n; ++j) {
      std::vector<char> on_some(graph.num_edges(), 0);
      for (const OraclePath& p : MinimumRiskPaths(paths[j])) {
        for (int e : p.edges) on_some[e] = 1;
      }
      for (int e = 0; e < graph.num_edges(); ++e) delta[e] += on_some[e];
    }
  }
  return delta;
}

double BruteForceMstRisk(const Graph& graph) {
  const int n = graph.num_vertices();
  const int m = graph.num_edges();
  if (m > 24) throw std::invalid_argument("too many edges for brute force");
  if (n == 1) return 0.0;
  double best = kInf;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != n - 1) continue;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    bool acyclic = true;
    double risk = 0.0;
    for (int e = 0; e < m && acyclic; ++e) {
      if (!(mask & (1u << e))) continue;
      const int a = Find(parent, graph.edge(e).u);
      const int b = Find(parent, graph.edge(e).v);
      if (a == b) acyclic = false;
      parent[a] = b;
      risk += graph.edge(e).value;
    }
    if (acyclic) best = std::min(best, risk);
  }
  return best;
}

void ForEachSteinerCandidate(
    const Graph& graph, std::span<const VertexId> terminals,
    const std::function<void(std::span<const int>)>& visit) {
  const int n = graph.num_vertices();
  const int m = graph.num_edges();
  if (m > 22) throw std::invalid_argument("too many edges for brute force");
  std::vector<int> chosen;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    chosen.clear();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<char> touched(n, 0);
    int touched_count = 0;
    bool acyclic = true;
    for (int e = 0; e < m && acyclic; ++e) {
      if (!(mask & (1u << e))) continue;
      const Edge& edge = graph.edge(e);
      const int a = Find(parent, edge.u);
      const int b = Find(parent, edge.v);
      if (a == b) acyclic = false;
      parent[a] = b;
      for (VertexId v : {edge.u, edge.v}) {
        if (!touched[v]) {
          touched[v] = 1;
          ++touched_count;
        }
      }
      chosen.push_back(e);
    }
    if (!acyclic) continue;
    const int k = static_cast<int>(chosen.size());
    if (k == 0) {
      if (terminals.size() == 1) visit(chosen);
      continue;
    }
    // Acyclic with |V'| = |E'| + 1 means a single tree.
    if (touched_count != k + 1) continue;
    const bool covers = std::all_of(terminals.begin(), terminals.end(),
                                    [&](VertexId t) { return touched[t]; });
    if (covers) visit(chosen);
  }
}

double BruteForceSteinerRisk(const Graph& graph,
                             std::span<const VertexId> terminals) {
  double best = kInf;
  ForEachSteinerCandidate(graph, terminals, [&](std::span<const int> edges) {
    double risk = 0.0;
    for (int e : edges) risk += graph.edge(e).value;
    best = std::min(best, risk);
  });
  return best;
}

Graph RandomTopology(std::mt19937_64& rng, int min_n, int max_n,
                     int max_extra) {
  const int n = std::uniform_int_distribution<int>(min_n, max_n)(rng);
  const std::int64_t max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
  const std::int64_t hi = std::min<std::int64_t>(max_m, n - 1 + max_extra);
  const std::int64_t m =
      std::uniform_int_distribution<std::int64_t>(n - 1, hi)(rng);
  return GenerateRandomGraph(n, m, rng());
}

Graph Reweighted(const Graph& topology, EdgeMode mode,
                 const std::function<double()>& draw) {
  std::vector<Edge> edges(topology.edges().begin(), topology.edges().end());
  for (Edge& e : edges) e.value = draw();
  return Graph::Create(topology.num_vertices(), mode, std::move(edges));
}

Graph RandomIntegerGraph(std::mt19937_64& rng, int min_n, int max_n,
                         int max_extra, int max_weight) {
  const Graph topology = RandomTopology(rng, min_n, max_n, max_extra);
  std::uniform_int_distribution<int> weight(1, max_weight);
  return Reweighted(topology, EdgeMode::kRisk,
                    [&] { return static_cast<double>(weight(rng)); });
}

Graph RandomRealGraph(std::mt19937_64& rng, int min_n, int max_n,
                      int max_extra) {
  const Graph topology = RandomTopology(rng, min_n, max_n, max_extra);
  std::uniform_real_distribution<double> weight(0.05, 10.0);
  return Reweighted(topology, EdgeMode::kRisk, [&] { return weight(rng); });
}

Graph RandomProbGraph(std::mt19937_64& rng, int min_n, int max_n,
                      int max_extra) {
  const Graph topology = RandomTopology(rng, min_n, max_n, max_extra);
  std::uniform_real_distribution<double> p(0.05, 1.0);
  return Reweighted(topology, EdgeMode::kProb, [&] { return p(rng); });
}

std::vector<VertexId> RandomTerminals(std::mt19937_64& rng, int n, int k) {
  std::vector<VertexId> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<Graph> AllConnectedGraphs(int n) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  std::vector<Graph> graphs;
  const std::uint32_t total = 1u << pairs.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> edges;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    int components = n;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (!(mask & (1u << i))) continue;
      edges.push_back({pairs[i].first, pairs[i].second, 1.0});
      const int a = Find(parent, pairs[i].first);
      const int b = Find(parent, pairs[i].second);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    if (components == 1) {
      graphs.push_back(Graph::Create(n, EdgeMode::kRisk, std::move(edges)));
    }
  }
  return graphs;
}

}  // namespace stegnet::testing
