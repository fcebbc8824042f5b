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

#ifndef STEGNET_TEXT_UTIL_H_
#define STEGNET_TEXT_UTIL_H_

// Line and token helpers shared by the graph and task parsers.

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace stegnet::internal {

struct TextLine {
  int number;  // 1-based
  std::string_view content;
};

// Non-blank, non-comment lines with trailing '\r' stripped.
std::vector<TextLine> SignificantLines(std::string_view text);

std::vector<std::string_view> SplitTokens(std::string_view line);

template <typename T>
std::optional<T> ParseNumber(std::string_view token) {
  T value{};
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::string FormatShortest(double value);

}  // namespace stegnet::internal

#endif  // STEGNET_TEXT_UTIL_H_
