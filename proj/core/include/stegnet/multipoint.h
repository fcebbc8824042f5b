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

#ifndef STEGNET_MULTIPOINT_H_
#define STEGNET_MULTIPOINT_H_

#include <span>
#include <string>
#include <vector>

#include "stegnet/graph.h"

namespace stegnet {

// Encoders and their decoder sets: encoder i sends to every vertex in
// decoder_sets[i]. The member set of task i is {encoders[i]} plus its
// decoders.
struct CommTask {
  std::vector<VertexId> encoders;
  std::vector<std::vector<VertexId>> decoder_sets;

  int size() const { return static_cast<int>(encoders.size()); }
  // Sorted member set of task i.
  std::vector<VertexId> Members(int i) const;
  // Sorted union of all member sets.
  std::vector<VertexId> Terminals() const;

  friend bool operator==(const CommTask&, const CommTask&) = default;
};

// Throws InvalidTaskError when a decoder set is empty or contains its own
// encoder or a repeated vertex, when the two lists differ in length, or when
// an id is outside the graph.
void ValidateTask(const CommTask& task, const Graph& graph);

// One task whose first terminal is the encoder and the rest its decoders.
CommTask TaskFromTerminals(std::span<const VertexId> terminals);

struct PlanGroup {
  std::vector<int> task_indices;    // into the original task, ascending
  std::vector<VertexId> terminals;  // sorted union of member sets
  std::vector<Edge> edges;          // sorted by (u, v)
  double risk = 0.0;
};

// A tree, or a forest with one tree per independent group. `risk` sums each
// selected edge once.
struct PlanSolution {
  std::vector<Edge> edges;  // sorted by (u, v)
  double risk = 0.0;
  std::vector<PlanGroup> groups;
};

// Groups task indices whose member sets overlap, transitively. Groups are
// ordered by their smallest member vertex; indices inside a group ascend.
std::vector<std::vector<int>> PartitionTaskIndices(const CommTask& task);

// The same partition materialised as independent sub-tasks.
std::vector<CommTask> PartitionTasks(const CommTask& task);

// Kruskal over edges sorted by (weight, u, v). Throws InfeasibleError if the
// graph is disconnected.
PlanSolution MinimumSpanningTree(const Graph& graph);

// Distance-network heuristic: metric closure on the terminals, its minimum
// spanning tree, expansion of each closure edge into a fewest-hop
// minimum-risk path, a minimum spanning tree of the expanded union, then
// repeated removal of non-terminal leaves. Cost is at most 2(1 - 1/k) times
// optimal for k terminals; exact for two terminals and for terminals = V.
// Throws NoPathError naming the first unreachable terminal pair.
PlanSolution SteinerApprox(const Graph& graph,
                           std::span<const VertexId> terminals);

inline constexpr int kDefaultSteinerExactLimit = 14;

// Optimal Steiner tree by enumerating every subset of non-terminal vertices
// and taking the minimum spanning tree of each connected induced subgraph.
// Exponential in the number of non-terminals; throws InstanceTooLargeError
// above `max_vertices`. Among equal-cost trees the first subset in
// enumeration order wins.
PlanSolution SteinerExactSmall(const Graph& graph,
                               std::span<const VertexId> terminals,
                               int max_vertices = kDefaultSteinerExactLimit);

// Partitions the task, solves each group with SteinerApprox and joins the
// group trees into a forest. If two group trees happen to share vertices,
// their union is reduced to a spanning forest so every edge is counted once.
// Throws NoPathError (message names the group) when a group's terminals are
// not mutually reachable.
PlanSolution SolveMultipoint(const Graph& graph, const CommTask& task);

struct ValidationResult {
  bool ok = true;
  std::string diagnostic;

  explicit operator bool() const { return ok; }
};

// Checks, in order: every edge belongs to the graph with its value, no
// repeated edges, no cycle, every terminal is covered, each encoder reaches
// all of its decoders, and the stated risk equals the edge sum. Reports the
// first violation.
ValidationResult ValidateSolution(const Graph& graph, const PlanSolution& sol,
                                  const CommTask& task);

}  // namespace stegnet

#endif  // STEGNET_MULTIPOINT_H_
