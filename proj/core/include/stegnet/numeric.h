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

#ifndef STEGNET_NUMERIC_H_
#define STEGNET_NUMERIC_H_

#include <algorithm>
#include <cmath>

namespace stegnet {

inline constexpr double kRelativeTolerance = 1e-9;
inline constexpr double kAbsoluteTolerance = 1e-12;

// Equality of risks: relative difference <= 1e-9, or absolute difference
// <= 1e-12 near zero. Infinities compare equal only to themselves.
inline bool RiskEqual(double a, double b) {
  if (a == b) return true;
  if (std::isinf(a) || std::isinf(b)) return false;
  const double diff = std::fabs(a - b);
  if (diff <= kAbsoluteTolerance) return true;
  return diff <= kRelativeTolerance * std::max(std::fabs(a), std::fabs(b));
}

// a < b by more than the tolerance.
inline bool RiskLess(double a, double b) { return a < b && !RiskEqual(a, b); }

}  // namespace stegnet

#endif  // STEGNET_NUMERIC_H_
