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

#include <string>

#include "polarf/context.hpp"
#include "polarf/parser.hpp"
#include "polarf/syntax.hpp"

namespace polarf {

// Single-line renderings in the concrete syntax, with the fewest parentheses
// that still re-parse to the same tree. Nested quantifiers are merged
// (forall a. forall b. N prints as forall a b. N).

std::string pretty(const PosRef &t);
std::string pretty(const NegRef &t);
std::string pretty(const Type &t);
std::string pretty(const ValueRef &v);
std::string pretty(const CompRef &c);
std::string pretty(const ArgList &s);
/// Entries separated by ", "; the empty context prints as ".".
std::string pretty(const AlgContext &theta);
/// The whole program, one declaration per line.
std::string pretty(const Program &p);

}  // namespace polarf
