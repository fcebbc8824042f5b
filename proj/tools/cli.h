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

#ifndef STEGNET_TOOLS_CLI_H_
#define STEGNET_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace stegnet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInfeasible = 2;

// Runs one invocation. `args` excludes the program name. Reports go to
// `out`, diagnostics to `err`. Returns the process exit code:
// 0 success, 1 usage or parse error, 2 infeasible instance.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace stegnet::cli

#endif  // STEGNET_TOOLS_CLI_H_
