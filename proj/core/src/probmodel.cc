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

#include "stegnet/probmodel.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stegnet/pathfind.h"

namespace stegnet {
namespace {

void CheckProbGraph(const Graph& graph) {
  if (graph.mode() != EdgeMode::kProb) {
    throw std::invalid_argument("expected a probability graph");
  }
}

}  // namespace

double ProbabilityToWeight(double probability) {
  if (probability == 1.0) return 0.0;
  return -std::log2(probability);
}

double WeightToProbability(double weight) { return std::exp2(-weight); }

Graph ProbToWeight(const Graph& graph) {
  CheckProbGraph(graph);
  std::vector<Edge> edges(graph.edges().begin(), graph.edges().end());
  for (Edge& e : edges) e.value = ProbabilityToWeight(e.value);
  return Graph::Create(graph.num_vertices(), EdgeMode::kRisk,
                       std::move(edges));
}

double PathReliability(const Graph& graph,
                       std::span<const VertexId> vertices) {
  CheckProbGraph(graph);
  // PathRisk validates adjacency; only the edge lookups are reused here.
  PathRisk(graph, vertices);
  double product = 1.0;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    product *= graph.edge(*graph.FindEdge(vertices[i - 1], vertices[i])).value;
  }
  return product;
}

double EdgeSetReliability(const Graph& graph, std::span<const Edge> edges) {
  CheckProbGraph(graph);
  double product = 1.0;
  for (const Edge& e : edges) {
    const auto index = graph.FindEdge(e.u, e.v);
    if (!index) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + ") not in graph");
    }
    product *= graph.edge(*index).value;
  }
  return product;
}

ReliabilityResult SolveProbabilistic(const Graph& graph,
                                     const CommTask& task) {
  CheckProbGraph(graph);
  ReliabilityResult result;
  result.plan = SolveMultipoint(ProbToWeight(graph), task);
  result.equivalent_risk = result.plan.risk;

  const auto restore = [&](std::vector<Edge>& edges) {
    for (Edge& e : edges) e.value = graph.edge(*graph.FindEdge(e.u, e.v)).value;
  };
  restore(result.plan.edges);
  for (PlanGroup& group : result.plan.groups) {
    restore(group.edges);
    group.risk = 0.0;
    for (const Edge& e : group.edges) group.risk += ProbabilityToWeight(e.value);
  }
  result.reliability = EdgeSetReliability(graph, result.plan.edges);
  return result;
}

}  // namespace stegnet
