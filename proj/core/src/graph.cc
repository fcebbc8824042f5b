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

#include "stegnet/graph.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

#include "stegnet/errors.h"

namespace stegnet {
namespace {

std::string EdgeName(const Edge& e) {
  return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

void ValidateValue(const Edge& e, EdgeMode mode) {
  if (mode == EdgeMode::kRisk) {
    if (!std::isfinite(e.value) || e.value < 0.0) {
      throw InvalidGraphError("edge " + EdgeName(e) +
                              ": risk weight must be finite and non-negative");
    }
  } else if (!(e.value > 0.0 && e.value <= 1.0)) {
    throw InvalidGraphError("edge " + EdgeName(e) +
                            ": probability must lie in (0, 1]");
  }
}

}  // namespace

Graph Graph::Create(int num_vertices, EdgeMode mode, std::vector<Edge> edges) {
  if (num_vertices < 1) {
    throw InvalidGraphError("graph needs at least one vertex");
  }
  for (Edge& e : edges) {
    if (e.u < 0 || e.u >= num_vertices || e.v < 0 || e.v >= num_vertices) {
      throw InvalidGraphError("edge " + EdgeName(e) + ": vertex id out of [0, " +
                              std::to_string(num_vertices) + ")");
    }
    if (e.u == e.v) {
      throw InvalidGraphError("edge " + EdgeName(e) + ": self-loop");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    ValidateValue(e, mode);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      throw InvalidGraphError("edge " + EdgeName(edges[i]) + ": duplicate");
    }
  }

  Graph g;
  g.num_vertices_ = num_vertices;
  g.mode_ = mode;
  g.edges_ = std::move(edges);

  std::vector<int> degree(num_vertices, 0);
  for (const Edge& e : g.edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(num_vertices + 1, 0);
  for (int v = 0; v < num_vertices; ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  }
  g.adjacency_.resize(g.offsets_.back());
  std::vector<int> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges_[i];
    g.adjacency_[fill[e.u]++] = {e.v, i};
    g.adjacency_[fill[e.v]++] = {e.u, i};
  }
  for (int v = 0; v < num_vertices; ++v) {
    std::sort(g.adjacency_.begin() + g.offsets_[v],
              g.adjacency_.begin() + g.offsets_[v + 1],
              [](const Neighbor& a, const Neighbor& b) {
                return a.vertex < b.vertex;
              });
  }
  return g;
}

std::optional<int> Graph::FindEdge(VertexId u, VertexId v) const {
  if (!contains(u) || !contains(v)) return std::nullopt;
  const auto adj = neighbors(u);
  const auto it = std::lower_bound(
      adj.begin(), adj.end(), v,
      [](const Neighbor& n, VertexId id) { return n.vertex < id; });
  if (it == adj.end() || it->vertex != v) return std::nullopt;
  return it->edge_index;
}

ComponentLabeling ConnectedComponents(const Graph& graph) {
  const int n = graph.num_vertices();
  ComponentLabeling result;
  result.label.assign(n, -1);
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (result.label[root] != -1) continue;
    const int label = result.count++;
    result.label[root] = label;
    stack.push_back(root);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const Neighbor& nb : graph.neighbors(v)) {
        if (result.label[nb.vertex] == -1) {
          result.label[nb.vertex] = label;
          stack.push_back(nb.vertex);
        }
      }
    }
  }
  return result;
}

bool IsConnected(const Graph& graph) {
  return ConnectedComponents(graph).count == 1;
}

Graph GenerateRandomGraph(int num_vertices, std::int64_t num_edges,
                          std::uint64_t seed) {
  const std::int64_t n = num_vertices;
  if (n < 2) {
    throw std::invalid_argument("random graph needs n >= 2");
  }
  const std::int64_t max_edges = n * (n - 1) / 2;
  if (num_edges < n - 1 || num_edges > max_edges) {
    throw std::invalid_argument(
        "edge count " + std::to_string(num_edges) + " outside [" +
        std::to_string(n - 1) + ", " + std::to_string(max_edges) + "]");
  }

  std::mt19937_64 rng(seed);
  const auto pair_key = [n](VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::int64_t>(a) * n + b;
  };

  std::vector<VertexId> order(num_vertices);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<Edge> edges;
  edges.reserve(num_edges);
  std::unordered_set<std::int64_t> used;
  for (int i = 1; i < num_vertices; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    const VertexId a = order[i];
    const VertexId b = order[pick(rng)];
    edges.push_back({std::min(a, b), std::max(a, b), 1.0});
    used.insert(pair_key(a, b));
  }

  const std::int64_t extra = num_edges - (n - 1);
  const std::int64_t available = max_edges - (n - 1);
  if (extra * 2 <= available) {
    // Sparse: rejection sampling over unordered pairs.
    std::uniform_int_distribution<int> first(0, num_vertices - 1);
    std::uniform_int_distribution<int> second(0, num_vertices - 2);
    while (static_cast<std::int64_t>(edges.size()) < num_edges) {
      const VertexId a = first(rng);
      VertexId b = second(rng);
      if (b >= a) ++b;
      if (used.insert(pair_key(a, b)).second) {
        edges.push_back({std::min(a, b), std::max(a, b), 1.0});
      }
    }
  } else {
    // Dense: partial Fisher-Yates over the explicit list of free pairs.
    std::vector<std::pair<VertexId, VertexId>> free_pairs;
    free_pairs.reserve(available);
    for (VertexId a = 0; a < num_vertices; ++a) {
      for (VertexId b = a + 1; b < num_vertices; ++b) {
        if (!used.contains(pair_key(a, b))) free_pairs.emplace_back(a, b);
      }
    }
    for (std::int64_t i = 0; i < extra; ++i) {
      std::uniform_int_distribution<std::int64_t> pick(
          i, static_cast<std::int64_t>(free_pairs.size()) - 1);
      std::swap(free_pairs[i], free_pairs[pick(rng)]);
      edges.push_back({free_pairs[i].first, free_pairs[i].second, 1.0});
    }
  }
  return Graph::Create(num_vertices, EdgeMode::kRisk, std::move(edges));
}

}  // namespace stegnet
