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

#ifndef STEGNET_GRAPH_H_
#define STEGNET_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace stegnet {

// Dense vertex index in [0, n).
using VertexId = int;

// What an edge value means. Risk values are additive costs, probability
// values are independent per-channel success rates.
enum class EdgeMode { kRisk, kProb };

// An undirected edge. Graphs store edges canonically with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double value = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  VertexId vertex;
  int edge_index;
};

// Immutable simple undirected graph. Edges are kept sorted by (u, v) and
// every adjacency list is sorted by neighbor id, so every traversal over the
// graph is deterministic.
//
// Validation performed by Create():
//   - n >= 1, endpoints in [0, n), no self-loops, no duplicate pairs;
//   - kRisk: every value finite and >= 0;
//   - kProb: every value in (0, 1].
// The text loader is stricter for risk graphs and rejects zero weights; zero
// weights only arise from the probability transform.
class Graph {
 public:
  static Graph Create(int num_vertices, EdgeMode mode, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  EdgeMode mode() const { return mode_; }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }
  std::span<const Neighbor> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }

  // Index into edges() of the edge joining u and v, if any.
  std::optional<int> FindEdge(VertexId u, VertexId v) const;

  bool contains(VertexId v) const { return v >= 0 && v < num_vertices_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.mode_ == b.mode_ &&
           a.edges_ == b.edges_;
  }

 private:
  Graph() = default;

  int num_vertices_ = 0;
  EdgeMode mode_ = EdgeMode::kRisk;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;
  std::vector<Neighbor> adjacency_;
};

struct ComponentLabeling {
  std::vector<int> label;
  int count = 0;

  bool connected(VertexId a, VertexId b) const {
    return label[a] == label[b];
  }
};

// Labels are assigned in order of each component's lowest vertex id.
ComponentLabeling ConnectedComponents(const Graph& graph);

bool IsConnected(const Graph& graph);

// Uniform random connected graph with exactly `num_edges` edges and unit
// risk weights. A random spanning tree is laid first (random permutation,
// each vertex attached to a uniformly chosen earlier one), then the remaining
// edges are drawn uniformly from the non-tree pairs. The stream comes from
// std::mt19937_64 seeded with `seed`; identical arguments give identical
// graphs.
//
// Throws std::invalid_argument unless n >= 2 and n-1 <= m <= n(n-1)/2.
Graph GenerateRandomGraph(int num_vertices, std::int64_t num_edges,
                          std::uint64_t seed);

}  // namespace stegnet

#endif  // STEGNET_GRAPH_H_
