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

#include "stegnet/task_io.h"

#include <string>
#include <utility>

#include "stegnet/errors.h"
#include "stegnet/graph_io.h"
#include "text_util.h"

namespace stegnet {

using internal::ParseNumber;

CommTask ParseTask(std::string_view text) {
  const auto lines = internal::SignificantLines(text);
  if (lines.empty()) throw ParseError(0, "missing header line 'tasks <k>'");
  const auto header = internal::SplitTokens(lines.front().content);
  if (header.size() != 2 || header[0] != "tasks") {
    throw ParseError(lines.front().number, "header must be 'tasks <k>'");
  }
  const auto count = ParseNumber<int>(header[1]);
  if (!count || *count < 1) {
    throw ParseError(lines.front().number,
                     "task count must be a positive integer");
  }
  if (static_cast<int>(lines.size()) - 1 != *count) {
    throw ParseError(0, "header announces " + std::to_string(*count) +
                            " tasks, file has " +
                            std::to_string(lines.size() - 1));
  }

  const auto vertex = [](std::string_view token, int line) {
    const auto id = ParseNumber<int>(token);
    if (!id || *id < 0) {
      throw ParseError(line, "'" + std::string(token) +
                                 "' is not a vertex id");
    }
    return *id;
  };

  CommTask task;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [line, content] = lines[i];
    const std::size_t colon = content.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(line, "expected '<s> : <t_1> <t_2> ...'");
    }
    const auto left = internal::SplitTokens(content.substr(0, colon));
    const auto right = internal::SplitTokens(content.substr(colon + 1));
    if (left.size() != 1) throw ParseError(line, "expected one encoder");
    if (right.empty()) throw ParseError(line, "decoder list is empty");
    task.encoders.push_back(vertex(left[0], line));
    auto& decoders = task.decoder_sets.emplace_back();
    for (std::string_view token : right) {
      decoders.push_back(vertex(token, line));
    }
  }
  return task;
}

std::string FormatTask(const CommTask& task) {
  std::string out = "tasks " + std::to_string(task.size()) + "\n";
  for (int i = 0; i < task.size(); ++i) {
    out += std::to_string(task.encoders[i]);
    out += " :";
    for (VertexId t : task.decoder_sets[i]) {
      out += ' ';
      out += std::to_string(t);
    }
    out += '\n';
  }
  return out;
}

CommTask LoadTaskFile(const std::filesystem::path& path) {
  return ParseTask(ReadTextFile(path));
}

}  // namespace stegnet
