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
#include <string>
#include <string_view>
#include <vector>

#include "polarf/signature.hpp"
#include "polarf/syntax.hpp"

namespace polarf {

struct DataDecl {
  std::string name;
  DatatypeInfo info;
  SourceSpan span;
};

struct Assumption {
  std::string name;
  PosRef type;
  SourceSpan span;
};

/// A parsed `.ipf` file: datatype declarations, `val` assumptions, and the
/// `run` body.
struct Program {
  std::string file;
  Signature signature = Signature::builtin();
  std::vector<DataDecl> datatypes;
  std::vector<Assumption> assumptions;
  CompRef body;
};

/// One `A <: B` line of a subtyping file.
struct SubJudgment {
  Type left;
  Type right;
  SourceSpan span;
};

struct SubFile {
  std::string file;
  Signature signature = Signature::builtin();
  std::vector<DataDecl> datatypes;
  std::vector<SubJudgment> judgments;
};

// All parse functions throw TypeError(ErrorKind::Parse) on the first error,
// with the offending span and the tokens that would have been accepted.

Program parse_program(std::string_view text, const std::string &file = "<input>");
SubFile parse_sub_file(std::string_view text, const std::string &file = "<input>");

/// Parses a type of the given polarity. Identifiers declared in `sig` are
/// constructors, every other identifier is a type variable. `^name` is an
/// existential and is accepted only when `allow_existentials` is set.
Type parse_type(std::string_view text, Polarity expected,
                const Signature &sig = Signature::builtin(),
                bool allow_existentials = false);
PosRef parse_pos_type(std::string_view text,
                      const Signature &sig = Signature::builtin(),
                      bool allow_existentials = false);
NegRef parse_neg_type(std::string_view text,
                      const Signature &sig = Signature::builtin(),
                      bool allow_existentials = false);

CompRef parse_computation(std::string_view text,
                          const Signature &sig = Signature::builtin());
ValueRef parse_value(std::string_view text,
                     const Signature &sig = Signature::builtin());

struct LineColumn {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// 1-based line and column of a byte offset.
LineColumn line_column(std::string_view text, std::size_t offset);

}  // namespace polarf
