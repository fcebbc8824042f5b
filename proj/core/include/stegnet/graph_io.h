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

#ifndef STEGNET_GRAPH_IO_H_
#define STEGNET_GRAPH_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "stegnet/graph.h"

namespace stegnet {

// Edge-list text format:
//
//   <mode> <n>          mode is "risk" or "prob"
//   <u> <v> <value>     one line per edge, u and v in [0, n)
//
// Blank lines and lines whose first non-space character is '#' are ignored.
// Throws ParseError for malformed lines and InvalidGraphError (with the line
// number in the message) for self-loops, duplicates and out-of-range values.
// Risk weights must be strictly positive in files.
Graph ParseGraph(std::string_view text);

// Inverse of ParseGraph. Values are written in shortest round-trip form, so
// ParseGraph(FormatGraph(g)) == g. Each entry of `comments` becomes a
// "# ..." line right after the header.
std::string FormatGraph(const Graph& graph,
                        const std::vector<std::string>& comments = {});

std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

Graph LoadGraphFile(const std::filesystem::path& path);

}  // namespace stegnet

#endif  // STEGNET_GRAPH_IO_H_
