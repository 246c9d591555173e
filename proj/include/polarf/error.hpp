// Copyright 2026 The polarf Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polarf/syntax.hpp"

namespace polarf {

enum class ErrorKind {
  Parse,
  IllFormed,
  UnboundVariable,
  SubtypeFailure,
  AmbiguousLet,
  Arity,
  Shape,
};

std::string_view to_string(ErrorKind kind);

/// One rule application in a derivation. `output` is empty when the rule
/// did not complete.
struct TraceStep {
  int depth = 0;
  std::string rule;
  std::string goal;
  std::string input;
  std::string output;
};

/// The single error carried by every rejection.
class TypeError : public std::runtime_error {
 public:
  TypeError(ErrorKind kind, std::string message, SourceSpan span = {});

  ErrorKind kind() const { return kind_; }
  const std::string &message() const { return message_; }
  const SourceSpan &span() const { return span_; }
  const std::vector<TraceStep> &trace() const { return trace_; }
  /// Tokens the parser would have accepted at the error position.
  const std::vector<std::string> &expected() const { return expected_; }

  void set_span(SourceSpan span) { span_ = std::move(span); }
  void set_trace(std::vector<TraceStep> trace) { trace_ = std::move(trace); }
  void set_expected(std::vector<std::string> e) { expected_ = std::move(e); }

 private:
  ErrorKind kind_;
  std::string message_;
  SourceSpan span_;
  std::vector<TraceStep> trace_;
  std::vector<std::string> expected_;
};

/// Raised when an internal invariant (a well-formedness postcondition, a
/// metric bound, a shape check) fails. Indicates a checker bug.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string &what)
      : std::logic_error("invariant violated: " + what) {}
};

}  // namespace polarf
