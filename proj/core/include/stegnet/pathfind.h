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

#ifndef STEGNET_PATHFIND_H_
#define STEGNET_PATHFIND_H_

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "stegnet/graph.h"

namespace stegnet {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// A simple path. `risk` is the sum of edge values along `vertices` and
// `hops` is vertices.size() - 1. A source equal to its target yields the
// one-vertex path with risk 0.
struct PathResult {
  std::vector<VertexId> vertices;
  double risk = 0.0;
  int hops = 0;

  // Edge indices into Graph::edges(), in path order.
  std::vector<int> EdgeIndices(const Graph& graph) const;
};

// Additive risk of a vertex sequence. A single vertex has risk 0. Throws
// std::invalid_argument if the sequence is empty, names an unknown vertex or
// steps between non-adjacent vertices.
double PathRisk(const Graph& graph, std::span<const VertexId> vertices);

// Fewest-hop path, ignoring weights. Neighbors are expanded in ascending id
// order. Throws NoPathError if s and t are in different components.
PathResult BfsShortestPath(const Graph& graph, VertexId s, VertexId t);

// Minimum-risk path on a risk graph (weights >= 0). Frontier ties go to the
// lower vertex id and a vertex's predecessor only changes on strict
// improvement. Throws NoPathError for disconnected pairs.
PathResult Dijkstra(const Graph& graph, VertexId s, VertexId t);

// Among minimum-risk paths, one with the fewest vertices. Risks are compared
// with RiskEqual.
PathResult MinVertexShortestPath(const Graph& graph, VertexId s, VertexId t);

// Single-source result: minimum risk to every vertex, and a predecessor tree
// in which every tree path is a minimum-risk path with the fewest hops among
// minimum-risk paths.
struct ShortestPathTree {
  VertexId source = 0;
  std::vector<double> distance;  // kInfinity when unreachable
  std::vector<int> hops;         // -1 when unreachable
  std::vector<VertexId> parent;  // -1 for the source and unreachable vertices

  bool reachable(VertexId v) const { return hops[v] >= 0; }
  // Vertex sequence from the source to `target`; empty if unreachable.
  std::vector<VertexId> PathTo(VertexId target) const;
};

ShortestPathTree ComputeShortestPathTree(const Graph& graph, VertexId source);

class DistanceMatrix {
 public:
  explicit DistanceMatrix(int n)
      : n_(n), data_(static_cast<std::size_t>(n) * n, kInfinity) {}

  int size() const { return n_; }
  double operator()(VertexId i, VertexId j) const { return data_[index(i, j)]; }
  double& operator()(VertexId i, VertexId j) { return data_[index(i, j)]; }

 private:
  std::size_t index(VertexId i, VertexId j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }

  int n_;
  std::vector<double> data_;
};

// Floyd-Warshall over the risk weights. Unreachable pairs stay +inf.
// Floyd-Warshall itself tolerates negative weights without negative cycles,
// but graphs never carry them: Graph::Create rejects negative risk values.
DistanceMatrix AllPairsDistances(const Graph& graph);

inline constexpr int kDefaultEnumerationLimit = 12;

// Every simple s-t path, found by depth-first search in ascending neighbor
// order. Exponential; guarded by `max_vertices` (InstanceTooLargeError).
std::vector<PathResult> EnumerateSimplePaths(
    const Graph& graph, VertexId s, VertexId t,
    int max_vertices = kDefaultEnumerationLimit);

}  // namespace stegnet

#endif  // STEGNET_PATHFIND_H_
