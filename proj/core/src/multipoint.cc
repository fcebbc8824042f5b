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

#include "stegnet/multipoint.h"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "stegnet/errors.h"
#include "stegnet/numeric.h"
#include "stegnet/pathfind.h"
#include "union_find.h"

namespace stegnet {
namespace {

std::string EdgeName(const Edge& e) {
  return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

void CheckRiskGraph(const Graph& graph) {
  if (graph.mode() != EdgeMode::kRisk) {
    throw std::invalid_argument(
        "risk planning needs a risk graph; transform probabilities first");
  }
}

std::vector<VertexId> NormalizeTerminals(const Graph& graph,
                                         std::span<const VertexId> terminals) {
  if (terminals.empty()) {
    throw std::invalid_argument("at least one terminal is required");
  }
  std::vector<VertexId> sorted(terminals.begin(), terminals.end());
  for (VertexId v : sorted) {
    if (!graph.contains(v)) {
      throw std::invalid_argument("terminal " + std::to_string(v) +
                                  " out of range");
    }
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return sorted;
}

// Kruskal over a subset of edge indices, in (weight, u, v) order.
std::vector<int> KruskalForest(const Graph& graph,
                               std::vector<int> candidates) {
  std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
    const Edge& x = graph.edge(a);
    const Edge& y = graph.edge(b);
    return std::tie(x.value, x.u, x.v) < std::tie(y.value, y.u, y.v);
  });
  internal::UnionFind forest(graph.num_vertices());
  std::vector<int> chosen;
  for (int index : candidates) {
    const Edge& e = graph.edge(index);
    if (forest.Union(e.u, e.v)) chosen.push_back(index);
  }
  return chosen;
}

// Repeatedly drops edges hanging off non-terminal leaves.
std::vector<int> PruneLeaves(const Graph& graph, std::vector<int> edges,
                             std::span<const VertexId> terminals) {
  const int n = graph.num_vertices();
  std::vector<char> is_terminal(n, 0);
  for (VertexId t : terminals) is_terminal[t] = 1;
  std::vector<int> degree(n, 0);
  std::vector<std::vector<int>> incident(n);
  for (int index : edges) {
    const Edge& e = graph.edge(index);
    ++degree[e.u];
    ++degree[e.v];
    incident[e.u].push_back(index);
    incident[e.v].push_back(index);
  }
  std::vector<char> removed(graph.num_edges(), 0);
  std::queue<VertexId> leaves;
  for (VertexId v = 0; v < n; ++v) {
    if (degree[v] == 1 && !is_terminal[v]) leaves.push(v);
  }
  while (!leaves.empty()) {
    const VertexId v = leaves.front();
    leaves.pop();
    if (degree[v] != 1) continue;
    for (int index : incident[v]) {
      if (removed[index]) continue;
      removed[index] = 1;
      const Edge& e = graph.edge(index);
      const VertexId other = e.u == v ? e.v : e.u;
      --degree[v];
      if (--degree[other] == 1 && !is_terminal[other]) leaves.push(other);
      break;
    }
  }
  std::erase_if(edges, [&](int index) { return removed[index] != 0; });
  return edges;
}

PlanSolution MakeSolution(const Graph& graph, std::vector<int> edge_indices) {
  std::sort(edge_indices.begin(), edge_indices.end());
  PlanSolution sol;
  for (int index : edge_indices) {
    sol.edges.push_back(graph.edge(index));
    sol.risk += graph.edge(index).value;
  }
  return sol;
}

PlanGroup WholeGroup(const PlanSolution& sol,
                     std::vector<VertexId> terminals) {
  PlanGroup group;
  group.task_indices = {0};
  group.terminals = std::move(terminals);
  group.edges = sol.edges;
  group.risk = sol.risk;
  return group;
}

void RequireSameComponent(const Graph& graph,
                          std::span<const VertexId> terminals) {
  const ComponentLabeling labels = ConnectedComponents(graph);
  for (std::size_t i = 1; i < terminals.size(); ++i) {
    if (!labels.connected(terminals[0], terminals[i])) {
      throw NoPathError(terminals[0], terminals[i]);
    }
  }
}

}  // namespace

std::vector<VertexId> CommTask::Members(int i) const {
  std::vector<VertexId> members = decoder_sets[i];
  members.push_back(encoders[i]);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

std::vector<VertexId> CommTask::Terminals() const {
  std::set<VertexId> all;
  for (int i = 0; i < size(); ++i) {
    all.insert(encoders[i]);
    all.insert(decoder_sets[i].begin(), decoder_sets[i].end());
  }
  return {all.begin(), all.end()};
}

void ValidateTask(const CommTask& task, const Graph& graph) {
  if (task.encoders.size() != task.decoder_sets.size()) {
    throw InvalidTaskError("every encoder needs exactly one decoder set");
  }
  for (int i = 0; i < task.size(); ++i) {
    const VertexId s = task.encoders[i];
    const std::string where = "task " + std::to_string(i) + ": ";
    if (!graph.contains(s)) {
      throw InvalidTaskError(where + "encoder " + std::to_string(s) +
                             " out of range");
    }
    const auto& decoders = task.decoder_sets[i];
    if (decoders.empty()) throw InvalidTaskError(where + "empty decoder set");
    std::set<VertexId> seen;
    for (VertexId t : decoders) {
      if (!graph.contains(t)) {
        throw InvalidTaskError(where + "decoder " + std::to_string(t) +
                               " out of range");
      }
      if (t == s) throw InvalidTaskError(where + "encoder listed as decoder");
      if (!seen.insert(t).second) {
        throw InvalidTaskError(where + "decoder " + std::to_string(t) +
                               " repeated");
      }
    }
  }
}

CommTask TaskFromTerminals(std::span<const VertexId> terminals) {
  if (terminals.size() < 2) {
    throw std::invalid_argument("a task needs at least two terminals");
  }
  CommTask task;
  task.encoders = {terminals[0]};
  task.decoder_sets = {{terminals.begin() + 1, terminals.end()}};
  return task;
}

std::vector<std::vector<int>> PartitionTaskIndices(const CommTask& task) {
  const int k = task.size();
  internal::UnionFind sets(k);
  std::map<VertexId, int> owner;
  for (int i = 0; i < k; ++i) {
    for (VertexId v : task.Members(i)) {
      const auto [it, inserted] = owner.emplace(v, i);
      if (!inserted) sets.Union(i, it->second);
    }
  }
  // owner is keyed by vertex id, so the first vertex seen for a root is the
  // group's smallest member.
  std::map<int, int> group_of_root;
  std::vector<std::vector<int>> groups;
  for (const auto& [vertex, index] : owner) {
    const int root = sets.Find(index);
    if (group_of_root.emplace(root, static_cast<int>(groups.size())).second) {
      groups.emplace_back();
    }
  }
  for (int i = 0; i < k; ++i) {
    groups[group_of_root.at(sets.Find(i))].push_back(i);
  }
  return groups;
}

std::vector<CommTask> PartitionTasks(const CommTask& task) {
  std::vector<CommTask> result;
  for (const auto& indices : PartitionTaskIndices(task)) {
    CommTask sub;
    for (int i : indices) {
      sub.encoders.push_back(task.encoders[i]);
      sub.decoder_sets.push_back(task.decoder_sets[i]);
    }
    result.push_back(std::move(sub));
  }
  return result;
}

PlanSolution MinimumSpanningTree(const Graph& graph) {
  CheckRiskGraph(graph);
  std::vector<int> all(graph.num_edges());
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> tree = KruskalForest(graph, std::move(all));
  if (static_cast<int>(tree.size()) != graph.num_vertices() - 1) {
    throw InfeasibleError("graph is disconnected; no spanning tree exists");
  }
  PlanSolution sol = MakeSolution(graph, std::move(tree));
  std::vector<VertexId> everyone(graph.num_vertices());
  std::iota(everyone.begin(), everyone.end(), 0);
  sol.groups.push_back(WholeGroup(sol, std::move(everyone)));
  return sol;
}

PlanSolution SteinerApprox(const Graph& graph,
                           std::span<const VertexId> terminal_span) {
  CheckRiskGraph(graph);
  const std::vector<VertexId> terminals =
      NormalizeTerminals(graph, terminal_span);
  const int k = static_cast<int>(terminals.size());
  if (k == 1) {
    PlanSolution sol;
    sol.groups.push_back(WholeGroup(sol, terminals));
    return sol;
  }

  std::vector<ShortestPathTree> trees;
  trees.reserve(k);
  for (VertexId t : terminals) {
    trees.push_back(ComputeShortestPathTree(graph, t));
  }

  struct ClosureEdge {
    double distance;
    int i;
    int j;
  };
  std::vector<ClosureEdge> closure;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (!trees[i].reachable(terminals[j])) {
        throw NoPathError(terminals[i], terminals[j]);
      }
      closure.push_back({trees[i].distance[terminals[j]], i, j});
    }
  }
  std::sort(closure.begin(), closure.end(),
            [](const ClosureEdge& a, const ClosureEdge& b) {
              return std::tie(a.distance, a.i, a.j) <
                     std::tie(b.distance, b.i, b.j);
            });

  internal::UnionFind closure_forest(k);
  std::vector<char> in_union(graph.num_edges(), 0);
  for (const ClosureEdge& c : closure) {
    if (!closure_forest.Union(c.i, c.j)) continue;
    PathResult path;
    path.vertices = trees[c.i].PathTo(terminals[c.j]);
    for (int index : path.EdgeIndices(graph)) in_union[index] = 1;
  }

  std::vector<int> expanded;
  for (int index = 0; index < graph.num_edges(); ++index) {
    if (in_union[index]) expanded.push_back(index);
  }
  std::vector<int> tree =
      PruneLeaves(graph, KruskalForest(graph, std::move(expanded)), terminals);
  PlanSolution sol = MakeSolution(graph, std::move(tree));
  sol.groups.push_back(WholeGroup(sol, terminals));
  return sol;
}

PlanSolution SteinerExactSmall(const Graph& graph,
                               std::span<const VertexId> terminal_span,
                               int max_vertices) {
  CheckRiskGraph(graph);
  const int n = graph.num_vertices();
  if (n > max_vertices) {
    throw InstanceTooLargeError(
        "exact Steiner search limited to " + std::to_string(max_vertices) +
        " vertices, graph has " + std::to_string(n));
  }
  const std::vector<VertexId> terminals =
      NormalizeTerminals(graph, terminal_span);
  RequireSameComponent(graph, terminals);
  if (terminals.size() == 1) {
    PlanSolution sol;
    sol.groups.push_back(WholeGroup(sol, terminals));
    return sol;
  }

  std::vector<char> is_terminal(n, 0);
  for (VertexId t : terminals) is_terminal[t] = 1;
  std::vector<VertexId> optional;
  for (VertexId v = 0; v < n; ++v) {
    if (!is_terminal[v]) optional.push_back(v);
  }

  const std::uint32_t subsets = 1u << optional.size();
  std::vector<int> best;
  double best_risk = kInfinity;
  std::vector<char> included(n, 0);
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    int vertex_count = static_cast<int>(terminals.size());
    std::fill(included.begin(), included.end(), 0);
    for (VertexId t : terminals) included[t] = 1;
    for (std::size_t b = 0; b < optional.size(); ++b) {
      if (mask & (1u << b)) {
        included[optional[b]] = 1;
        ++vertex_count;
      }
    }
    std::vector<int> induced;
    for (int index = 0; index < graph.num_edges(); ++index) {
      const Edge& e = graph.edge(index);
      if (included[e.u] && included[e.v]) induced.push_back(index);
    }
    std::vector<int> tree = KruskalForest(graph, std::move(induced));
    if (static_cast<int>(tree.size()) != vertex_count - 1) continue;
    tree = PruneLeaves(graph, std::move(tree), terminals);
    double risk = 0.0;
    for (int index : tree) risk += graph.edge(index).value;
    if (RiskLess(risk, best_risk)) {
      best_risk = risk;
      best = std::move(tree);
    }
  }

  PlanSolution sol = MakeSolution(graph, std::move(best));
  sol.groups.push_back(WholeGroup(sol, terminals));
  return sol;
}

PlanSolution SolveMultipoint(const Graph& graph, const CommTask& task) {
  CheckRiskGraph(graph);
  ValidateTask(task, graph);

  const auto partition = PartitionTaskIndices(task);
  std::vector<PlanGroup> groups;
  std::vector<char> in_union(graph.num_edges(), 0);
  for (std::size_t g = 0; g < partition.size(); ++g) {
    PlanGroup group;
    group.task_indices = partition[g];
    std::set<VertexId> members;
    for (int i : partition[g]) {
      for (VertexId v : task.Members(i)) members.insert(v);
    }
    group.terminals.assign(members.begin(), members.end());
    PlanSolution tree;
    try {
      tree = SteinerApprox(graph, group.terminals);
    } catch (const NoPathError& e) {
      throw NoPathError(e.source(), e.target(),
                        "group " + std::to_string(g) + " unreachable");
    }
    for (const Edge& e : tree.edges) in_union[*graph.FindEdge(e.u, e.v)] = 1;
    groups.push_back(std::move(group));
  }

  // Vertex-disjoint group trees pass through unchanged; overlapping ones are
  // merged into one tree.
  std::vector<int> candidates;
  for (int index = 0; index < graph.num_edges(); ++index) {
    if (in_union[index]) candidates.push_back(index);
  }
  const std::vector<VertexId> terminals = task.Terminals();
  PlanSolution sol = MakeSolution(
      graph,
      PruneLeaves(graph, KruskalForest(graph, std::move(candidates)),
                  terminals));

  internal::UnionFind forest(graph.num_vertices());
  for (const Edge& e : sol.edges) forest.Union(e.u, e.v);
  for (PlanGroup& group : groups) {
    const int root = forest.Find(group.terminals.front());
    for (const Edge& e : sol.edges) {
      if (forest.Find(e.u) == root) {
        group.edges.push_back(e);
        group.risk += e.value;
      }
    }
  }
  sol.groups = std::move(groups);
  return sol;
}

ValidationResult ValidateSolution(const Graph& graph, const PlanSolution& sol,
                                  const CommTask& task) {
  const auto fail = [](std::string message) {
    return ValidationResult{false, std::move(message)};
  };

  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : sol.edges) {
    const auto index = graph.FindEdge(e.u, e.v);
    if (!index) return fail("edge " + EdgeName(e) + " not in graph");
    if (graph.edge(*index).value != e.value) {
      return fail("edge " + EdgeName(e) + " value differs from graph");
    }
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      return fail("edge " + EdgeName(e) + " repeated");
    }
  }

  internal::UnionFind forest(graph.num_vertices());
  std::vector<char> touched(graph.num_vertices(), 0);
  for (const Edge& e : sol.edges) {
    if (!forest.Union(e.u, e.v)) {
      return fail("cycle closed by edge " + EdgeName(e));
    }
    touched[e.u] = touched[e.v] = 1;
  }

  for (VertexId t : task.Terminals()) {
    if (!graph.contains(t) || !touched[t]) {
      return fail("uncovered terminal " + std::to_string(t));
    }
  }

  for (int i = 0; i < task.size(); ++i) {
    const VertexId s = task.encoders[i];
    for (VertexId t : task.decoder_sets[i]) {
      if (forest.Find(s) != forest.Find(t)) {
        return fail("task " + std::to_string(i) + ": terminals " +
                    std::to_string(s) + " and " + std::to_string(t) +
                    " disconnected");
      }
    }
  }

  double risk = 0.0;
  for (const Edge& e : sol.edges) risk += e.value;
  if (!RiskEqual(risk, sol.risk)) {
    return fail("risk mismatch: edges sum to " + std::to_string(risk) +
                ", solution states " + std::to_string(sol.risk));
  }
  return {};
}

}  // namespace stegnet
