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

#ifndef STEGNET_TESTS_SUPPORT_FIXTURES_H_
#define STEGNET_TESTS_SUPPORT_FIXTURES_H_

#include <vector>

#include "stegnet/graph.h"

namespace stegnet::testing {

inline Graph RiskGraph(int n, std::vector<Edge> edges) {
  return Graph::Create(n, EdgeMode::kRisk, std::move(edges));
}

inline Graph ProbGraph(int n, std::vector<Edge> edges) {
  return Graph::Create(n, EdgeMode::kProb, std::move(edges));
}

// 0-1-2 with unit weights.
inline Graph PathGraph3() { return RiskGraph(3, {{0, 1, 1}, {1, 2, 1}}); }

// {(0,1,1), (1,2,1), (0,2,3)}: the direct edge is the expensive route.
inline Graph Triangle() {
  return RiskGraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 3}});
}

// Center 0, leaves 1..3.
inline Graph Star3() { return RiskGraph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}}); }

// The six-vertex multicast example, v1..v6 mapped to ids 0..5: v1 reaches
// v4 through either v2 or v3, and v4 fans out to v5 and v6.
inline Graph MulticastExample() {
  return RiskGraph(6, {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {2, 3, 1}, {3, 4, 1},
                       {3, 5, 1}});
}

}  // namespace stegnet::testing

#endif  // STEGNET_TESTS_SUPPORT_FIXTURES_H_
