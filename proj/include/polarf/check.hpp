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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polarf/error.hpp"
#include "polarf/parser.hpp"
#include "polarf/session.hpp"
#include "polarf/syntax.hpp"

namespace polarf {

enum class Status { Accepted, Rejected, Malformed, InternalError };

std::string_view to_string(Status s);

/// Process exit code for a status: 0 accepted, 1 rejected, 2 malformed,
/// 3 internal error.
int exit_code(Status s);

struct Diagnostic {
  ErrorKind kind = ErrorKind::Parse;
  std::string message;
  SourceSpan span;
  LineColumn position;
  std::vector<std::string> expected;
};

struct CheckOutcome {
  Status status = Status::InternalError;
  NegRef type;                      // set when accepted
  std::optional<Diagnostic> error;  // set when rejected or malformed
  std::string internal;             // set on an internal error
  std::vector<TraceStep> trace;
  SessionStats stats;
};

/// Parses, checks well-formedness, and synthesizes the type of a program.
/// Never throws.
CheckOutcome check_source(std::string_view text, const std::string &file,
                          CheckOptions options = {});

/// Checks an already parsed program. `text` is used only to turn offsets
/// into line and column numbers.
CheckOutcome check_program(const Program &program, std::string_view text,
                           CheckOptions options = {});

/// One `A <: B` judgment, checked in a context holding its free type
/// variables in alphabetical order.
struct SubVerdict {
  std::string left;
  std::string right;
  std::size_t line = 0;
  bool holds = false;
  std::string message;  // the failure when it does not hold
};

struct SubOutcome {
  Status status = Status::InternalError;  // Accepted iff every judgment holds
  std::vector<SubVerdict> verdicts;
  std::optional<Diagnostic> error;
  std::string internal;
};

SubOutcome check_sub_source(std::string_view text, const std::string &file,
                            CheckOptions options = {});

/// `OK : <type>` or `<file>:<line>:<column>: error[<kind>]: <message>`.
std::string render_text(const CheckOutcome &outcome);
/// One line per rule: indentation by depth, rule, goal, input and output.
std::string render_trace(const std::vector<TraceStep> &trace);
/// The record {status, type, error, trace}. Key order and formatting are
/// fixed, so equal outcomes render to identical bytes.
std::string render_json(const CheckOutcome &outcome);
std::string render_sub(const SubOutcome &outcome);

}  // namespace polarf
