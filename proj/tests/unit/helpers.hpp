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

// Shorthands for writing types and contexts in unit tests.

#include <string>

#include "polarf/context.hpp"
#include "polarf/parser.hpp"
#include "polarf/pretty.hpp"
#include "polarf/types.hpp"
#include "testkit.hpp"

namespace polarf::test {

inline PosRef P(const std::string &s) {
  return parse_pos_type(s, testkit::test_signature(), true);
}
inline NegRef N(const std::string &s) {
  return parse_neg_type(s, testkit::test_signature(), true);
}

inline AlgContext ctx(std::vector<ContextEntry> entries) {
  return AlgContext(std::move(entries));
}
inline ContextEntry U(std::string n) { return Universal{std::move(n)}; }
inline ContextEntry E(std::string n) { return Unsolved{std::move(n)}; }
inline ContextEntry S(std::string n, const std::string &solution) {
  return Solved{std::move(n), P(solution)};
}

}  // namespace polarf::test
