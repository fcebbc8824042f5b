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

#ifndef STEGNET_PROBMODEL_H_
#define STEGNET_PROBMODEL_H_

#include <span>

#include "stegnet/graph.h"
#include "stegnet/multipoint.h"

namespace stegnet {

// w = log2(1/p). p == 1 maps to exactly +0.
double ProbabilityToWeight(double probability);
// p = 2^-w, the inverse of ProbabilityToWeight.
double WeightToProbability(double weight);

// Same topology, each probability replaced by log2(1/p). Maximising a
// product of probabilities over any edge family is then the same as
// minimising the sum of the new weights.
Graph ProbToWeight(const Graph& graph);

// Product of edge probabilities along the sequence; 1 for a single vertex.
// Throws std::invalid_argument for non-adjacent steps.
double PathReliability(const Graph& graph, std::span<const VertexId> vertices);

// Product of the probabilities of `edges` looked up in `graph`.
double EdgeSetReliability(const Graph& graph, std::span<const Edge> edges);

struct ReliabilityResult {
  // Edges carry the original probabilities; plan.risk and group risks stay
  // in the transformed log2 units.
  PlanSolution plan;
  double reliability = 1.0;
  double equivalent_risk = 0.0;  // log2(1 / reliability)
};

// Plans on ProbToWeight(graph) with SolveMultipoint and reports the plan with
// the original probabilities. Reliability of a forest is the product over
// all of its edges.
ReliabilityResult SolveProbabilistic(const Graph& graph, const CommTask& task);

}  // namespace stegnet

#endif  // STEGNET_PROBMODEL_H_
