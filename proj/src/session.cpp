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


#include "polarf/session.hpp"

#include <cctype>

#include "polarf/pretty.hpp"

namespace polarf {

namespace {

std::string hint_stem(const std::string &hint) {
  std::string stem = hint;
  while (!stem.empty() && (std::isdigit(static_cast<unsigned char>(stem.back())) ||
                           stem.back() == '\''))
    stem.pop_back();
  return stem.empty() ? "e" : stem;
}

}  // namespace

std::string Session::fresh_existential(const std::string &hint,
                                       const AlgContext &theta) {
  // The stem never ends in a digit, so stem + counter is unique per counter.
  const std::string stem = hint_stem(hint);
  while (true) {
    std::string name = stem + std::to_string(++counter_);
    if (!theta.has_existential(name)) return name;
  }
}

std::size_t Session::open_step(std::string rule, std::string goal,
                               std::string input) {
  trace_.push_back({depth_, std::move(rule), std::move(goal), std::move(input), ""});
  ++depth_;
  return trace_.size() - 1;
}

void Session::close_step(std::size_t index, std::string output) {
  trace_.at(index).output = std::move(output);
}

std::string TraceScope::render(const AlgContext &theta) { return pretty(theta); }

void check_descent(Session &s, const Metric *parent, const Metric &child,
                   const char *rule) {
  ++s.stats().metric_checks;
  if (parent != nullptr && !(child < *parent))
    throw InvariantViolation(std::string("decidability metric did not decrease in ") +
                             rule + ": (" + std::to_string(parent->first) + ", " +
                             std::to_string(parent->second) + ") to (" +
                             std::to_string(child.first) + ", " +
                             std::to_string(child.second) + ")");
}

}  // namespace polarf
