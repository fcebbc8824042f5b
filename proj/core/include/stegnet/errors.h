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

#ifndef STEGNET_ERRORS_H_
#define STEGNET_ERRORS_H_

#include <stdexcept>
#include <string>

namespace stegnet {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph or task text. `line()` is 1-based; 0 when the problem is
// not tied to a single line (e.g. a missing header).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// A graph that violates the model: self-loops, duplicate edges, values out
// of range for the graph's mode, or vertex ids outside [0, n).
class InvalidGraphError : public Error {
 public:
  using Error::Error;
};

// A task that violates its invariants (empty decoder set, encoder listed as
// its own decoder, ids out of range).
class InvalidTaskError : public Error {
 public:
  using Error::Error;
};

// The instance has no feasible plan: terminals in different components or a
// graph that must be connected but is not.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class NoPathError : public InfeasibleError {
 public:
  NoPathError(int source, int target);
  NoPathError(int source, int target, const std::string& context);
  int source() const { return source_; }
  int target() const { return target_; }

 private:
  int source_;
  int target_;
};

// Raised by the exhaustive oracles when the input exceeds their size guard.
class InstanceTooLargeError : public Error {
 public:
  using Error::Error;
};

}  // namespace stegnet

#endif  // STEGNET_ERRORS_H_
