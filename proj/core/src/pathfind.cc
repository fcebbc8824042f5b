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

#include "stegnet/pathfind.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

#include "stegnet/errors.h"
#include "stegnet/numeric.h"

namespace stegnet {
namespace {

void CheckVertex(const Graph& graph, VertexId v) {
  if (!graph.contains(v)) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range");
  }
}

void CheckRiskGraph(const Graph& graph) {
  if (graph.mode() != EdgeMode::kRisk) {
    throw std::invalid_argument(
        "risk planning needs a risk graph; transform probabilities first");
  }
}

PathResult MakeResult(const Graph& graph, std::vector<VertexId> vertices) {
  PathResult result;
  result.risk = PathRisk(graph, vertices);
  result.hops = static_cast<int>(vertices.size()) - 1;
  result.vertices = std::move(vertices);
  return result;
}

std::vector<VertexId> Unwind(const std::vector<VertexId>& parent,
                             VertexId target) {
  std::vector<VertexId> path;
  for (VertexId v = target; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// Dijkstra distances with deterministic predecessors.
void RunDijkstra(const Graph& graph, VertexId source,
                 std::vector<double>& distance, std::vector<VertexId>& parent) {
  const int n = graph.num_vertices();
  distance.assign(n, kInfinity);
  parent.assign(n, -1);
  std::vector<char> settled(n, 0);
  using Entry = std::pair<double, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  distance[source] = 0.0;
  frontier.emplace(0.0, source);
  while (!frontier.empty()) {
    const auto [d, v] = frontier.top();
    frontier.pop();
    if (settled[v]) continue;
    settled[v] = 1;
    for (const Neighbor& nb : graph.neighbors(v)) {
      if (settled[nb.vertex]) continue;
      const double candidate = d + graph.edge(nb.edge_index).value;
      if (candidate < distance[nb.vertex]) {
        distance[nb.vertex] = candidate;
        parent[nb.vertex] = v;
        frontier.emplace(candidate, nb.vertex);
      }
    }
  }
}

}  // namespace

std::vector<int> PathResult::EdgeIndices(const Graph& graph) const {
  std::vector<int> indices;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    const auto e = graph.FindEdge(vertices[i - 1], vertices[i]);
    if (!e) throw std::invalid_argument("path steps across a non-edge");
    indices.push_back(*e);
  }
  return indices;
}

double PathRisk(const Graph& graph, std::span<const VertexId> vertices) {
  if (vertices.empty()) throw std::invalid_argument("empty vertex sequence");
  for (VertexId v : vertices) CheckVertex(graph, v);
  double risk = 0.0;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    const auto e = graph.FindEdge(vertices[i - 1], vertices[i]);
    if (!e) {
      throw std::invalid_argument(
          "vertices " + std::to_string(vertices[i - 1]) + " and " +
          std::to_string(vertices[i]) + " are not adjacent");
    }
    risk += graph.edge(*e).value;
  }
  return risk;
}

PathResult BfsShortestPath(const Graph& graph, VertexId s, VertexId t) {
  CheckVertex(graph, s);
  CheckVertex(graph, t);
  std::vector<VertexId> parent(graph.num_vertices(), -1);
  std::vector<char> seen(graph.num_vertices(), 0);
  std::queue<VertexId> queue;
  seen[s] = 1;
  queue.push(s);
  while (!queue.empty() && !seen[t]) {
    const VertexId v = queue.front();
    queue.pop();
    for (const Neighbor& nb : graph.neighbors(v)) {
      if (seen[nb.vertex]) continue;
      seen[nb.vertex] = 1;
      parent[nb.vertex] = v;
      queue.push(nb.vertex);
    }
  }
  if (!seen[t]) throw NoPathError(s, t);
  return MakeResult(graph, Unwind(parent, t));
}

PathResult Dijkstra(const Graph& graph, VertexId s, VertexId t) {
  CheckRiskGraph(graph);
  CheckVertex(graph, s);
  CheckVertex(graph, t);
  std::vector<double> distance;
  std::vector<VertexId> parent;
  RunDijkstra(graph, s, distance, parent);
  if (distance[t] == kInfinity) throw NoPathError(s, t);
  return MakeResult(graph, Unwind(parent, t));
}

ShortestPathTree ComputeShortestPathTree(const Graph& graph, VertexId source) {
  CheckRiskGraph(graph);
  CheckVertex(graph, source);
  ShortestPathTree tree;
  tree.source = source;
  std::vector<VertexId> unused;
  RunDijkstra(graph, source, tree.distance, unused);

  // Breadth-first search restricted to tight edges (those lying on some
  // minimum-risk path) yields the fewest hops among minimum-risk paths.
  const int n = graph.num_vertices();
  tree.hops.assign(n, -1);
  tree.parent.assign(n, -1);
  std::queue<VertexId> queue;
  tree.hops[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    for (const Neighbor& nb : graph.neighbors(v)) {
      if (tree.hops[nb.vertex] != -1) continue;
      const double via = tree.distance[v] + graph.edge(nb.edge_index).value;
      if (!RiskEqual(via, tree.distance[nb.vertex])) continue;
      tree.hops[nb.vertex] = tree.hops[v] + 1;
      tree.parent[nb.vertex] = v;
      queue.push(nb.vertex);
    }
  }
  return tree;
}

std::vector<VertexId> ShortestPathTree::PathTo(VertexId target) const {
  if (!reachable(target)) return {};
  return Unwind(parent, target);
}

PathResult MinVertexShortestPath(const Graph& graph, VertexId s, VertexId t) {
  CheckVertex(graph, t);
  const ShortestPathTree tree = ComputeShortestPathTree(graph, s);
  if (!tree.reachable(t)) throw NoPathError(s, t);
  return MakeResult(graph, tree.PathTo(t));
}

DistanceMatrix AllPairsDistances(const Graph& graph) {
  CheckRiskGraph(graph);
  const int n = graph.num_vertices();
  DistanceMatrix d(n);
  for (VertexId i = 0; i < n; ++i) d(i, i) = 0.0;
  for (const Edge& e : graph.edges()) {
    d(e.u, e.v) = std::min(d(e.u, e.v), e.value);
    d(e.v, e.u) = d(e.u, e.v);
  }
  for (VertexId k = 0; k < n; ++k) {
    for (VertexId i = 0; i < n; ++i) {
      const double ik = d(i, k);
      if (ik == kInfinity) continue;
      for (VertexId j = 0; j < n; ++j) {
        const double through = ik + d(k, j);
        if (through < d(i, j)) d(i, j) = through;
      }
    }
  }
  return d;
}

std::vector<PathResult> EnumerateSimplePaths(const Graph& graph, VertexId s,
                                             VertexId t, int max_vertices) {
  if (graph.num_vertices() > max_vertices) {
    throw InstanceTooLargeError(
        "path enumeration limited to " + std::to_string(max_vertices) +
        " vertices, graph has " + std::to_string(graph.num_vertices()));
  }
  CheckVertex(graph, s);
  CheckVertex(graph, t);

  std::vector<PathResult> paths;
  std::vector<VertexId> current{s};
  std::vector<char> on_path(graph.num_vertices(), 0);
  on_path[s] = 1;
  const std::function<void(VertexId)> extend = [&](VertexId v) {
    if (v == t) {
      paths.push_back(MakeResult(graph, current));
      return;
    }
    for (const Neighbor& nb : graph.neighbors(v)) {
      if (on_path[nb.vertex]) continue;
      on_path[nb.vertex] = 1;
      current.push_back(nb.vertex);
      extend(nb.vertex);
      current.pop_back();
      on_path[nb.vertex] = 0;
    }
  };
  extend(s);
  return paths;
}

}  // namespace stegnet
