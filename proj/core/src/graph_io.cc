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

#include "stegnet/graph_io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "stegnet/errors.h"
#include "text_util.h"

namespace stegnet {
namespace internal {

std::vector<TextLine> SignificantLines(std::string_view text) {
  std::vector<TextLine> lines;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{}
                                         : text.substr(end + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    lines.push_back({number, line});
  }
  return lines;
}

std::vector<std::string_view> SplitTokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (true) {
    pos = line.find_first_not_of(" \t", pos);
    if (pos == std::string_view::npos) break;
    std::size_t end = line.find_first_of(" \t", pos);
    if (end == std::string_view::npos) end = line.size();
    tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

std::string FormatShortest(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

}  // namespace internal

using internal::ParseNumber;

Graph ParseGraph(std::string_view text) {
  const auto lines = internal::SignificantLines(text);
  if (lines.empty()) throw ParseError(0, "missing header line '<mode> <n>'");

  const auto header = internal::SplitTokens(lines.front().content);
  const int header_line = lines.front().number;
  if (header.size() != 2) {
    throw ParseError(header_line, "header must be '<mode> <n>'");
  }
  EdgeMode mode;
  if (header[0] == "risk") {
    mode = EdgeMode::kRisk;
  } else if (header[0] == "prob") {
    mode = EdgeMode::kProb;
  } else {
    throw ParseError(header_line, "unknown mode '" + std::string(header[0]) +
                                      "' (expected risk or prob)");
  }
  const auto n = ParseNumber<int>(header[1]);
  if (!n || *n < 1) {
    throw ParseError(header_line, "vertex count must be a positive integer");
  }

  std::vector<Edge> edges;
  std::set<std::pair<VertexId, VertexId>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int line = lines[i].number;
    const auto tokens = internal::SplitTokens(lines[i].content);
    if (tokens.size() != 3) {
      throw ParseError(line, "expected '<u> <v> <value>'");
    }
    const auto u = ParseNumber<int>(tokens[0]);
    const auto v = ParseNumber<int>(tokens[1]);
    const auto value = ParseNumber<double>(tokens[2]);
    if (!u || !v) throw ParseError(line, "vertex ids must be integers");
    if (!value) throw ParseError(line, "edge value must be a decimal number");
    if (*u < 0 || *u >= *n || *v < 0 || *v >= *n) {
      throw ParseError(line, "vertex id out of range [0, " +
                                 std::to_string(*n) + ")");
    }
    const std::string where = "line " + std::to_string(line) + ": ";
    if (*u == *v) throw InvalidGraphError(where + "self-loop");
    if (!seen.emplace(std::min(*u, *v), std::max(*u, *v)).second) {
      throw InvalidGraphError(where + "duplicate edge");
    }
    if (mode == EdgeMode::kRisk && !(*value > 0.0 && std::isfinite(*value))) {
      throw InvalidGraphError(where + "risk weight must be > 0 and finite");
    }
    if (mode == EdgeMode::kProb && !(*value > 0.0 && *value <= 1.0)) {
      throw InvalidGraphError(where + "probability must lie in (0, 1]");
    }
    edges.push_back({*u, *v, *value});
  }
  return Graph::Create(*n, mode, std::move(edges));
}

std::string FormatGraph(const Graph& graph,
                        const std::vector<std::string>& comments) {
  std::string out = graph.mode() == EdgeMode::kRisk ? "risk " : "prob ";
  out += std::to_string(graph.num_vertices());
  out += '\n';
  for (const std::string& c : comments) {
    out += "# ";
    out += c;
    out += '\n';
  }
  for (const Edge& e : graph.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += ' ';
    out += internal::FormatShortest(e.value);
    out += '\n';
  }
  return out;
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

Graph LoadGraphFile(const std::filesystem::path& path) {
  return ParseGraph(ReadTextFile(path));
}

}  // namespace stegnet
