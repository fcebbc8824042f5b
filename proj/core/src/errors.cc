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

#include "stegnet/errors.h"

#include <string>

namespace stegnet {

ParseError::ParseError(int line, const std::string& message)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                     : message),
      line_(line) {}

NoPathError::NoPathError(int source, int target)
    : InfeasibleError("no path between " + std::to_string(source) + " and " +
                      std::to_string(target)),
      source_(source),
      target_(target) {}

NoPathError::NoPathError(int source, int target, const std::string& context)
    : InfeasibleError(context + ": no path between " + std::to_string(source) +
                      " and " + std::to_string(target)),
      source_(source),
      target_(target) {}

}  // namespace stegnet
