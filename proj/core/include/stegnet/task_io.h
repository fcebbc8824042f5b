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

#ifndef STEGNET_TASK_IO_H_
#define STEGNET_TASK_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "stegnet/multipoint.h"

namespace stegnet {

// Task text format:
//
//   tasks <k>
//   <s_i> : <t_1> <t_2> ...     exactly k lines
//
// Comment and blank-line rules match the graph format. Only syntax is
// checked here; ValidateTask checks the task against a graph.
CommTask ParseTask(std::string_view text);
std::string FormatTask(const CommTask& task);
CommTask LoadTaskFile(const std::filesystem::path& path);

}  // namespace stegnet

#endif  // STEGNET_TASK_IO_H_
