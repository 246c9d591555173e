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
#include <utility>
#include <vector>

#include "polarf/context.hpp"
#include "polarf/error.hpp"

namespace polarf {

struct CheckOptions {
  /// Record a rule-by-rule derivation.
  bool trace = false;
  /// Check the well-formedness postconditions (output context well-formed,
  /// extension, groundness of applied results) after every judgment.
  bool verify = false;
};

/// Counts of the internal assertions that ran. The metric and the size
/// bound are always checked; postconditions only under `verify`.
struct SessionStats {
  std::size_t metric_checks = 0;
  std::size_t bound_checks = 0;
  std::size_t postcondition_checks = 0;
};

/// State for one checking run: options, the fresh-name counter, the
/// derivation trace. Not shared between threads; independent sessions may
/// run concurrently.
class Session {
 public:
  explicit Session(CheckOptions options = {}) : options_(options) {}

  const CheckOptions &options() const { return options_; }
  bool tracing() const { return options_.trace; }
  bool verifying() const { return options_.verify; }

  /// A fresh existential name derived from `hint`, distinct from every
  /// existential in theta and from every earlier result.
  std::string fresh_existential(const std::string &hint, const AlgContext &theta);

  SessionStats &stats() { return stats_; }
  const SessionStats &stats() const { return stats_; }

  const std::vector<TraceStep> &trace() const { return trace_; }

  std::size_t open_step(std::string rule, std::string goal, std::string input);
  void close_step(std::size_t index, std::string output);
  void leave() { --depth_; }

 private:
  CheckOptions options_;
  std::size_t counter_ = 0;
  std::vector<TraceStep> trace_;
  int depth_ = 0;
  SessionStats stats_;
};

/// Records one rule application for the lifetime of the scope. Goal and
/// input are rendered only when the session traces.
class TraceScope {
 public:
  template <typename GoalFn>
  TraceScope(Session &s, const char *rule, GoalFn &&goal, const AlgContext &input)
      : session_(s), active_(s.tracing()) {
    if (active_) index_ = s.open_step(rule, goal(), render(input));
  }
  ~TraceScope() {
    if (active_) session_.leave();
  }
  TraceScope(const TraceScope &) = delete;
  TraceScope &operator=(const TraceScope &) = delete;

  void done(const AlgContext &output) {
    if (active_) session_.close_step(index_, render(output));
  }
  template <typename OutFn>
  void done_with(OutFn &&out) {
    if (active_) session_.close_step(index_, out());
  }

  static std::string render(const AlgContext &theta);

 private:
  Session &session_;
  bool active_;
  std::size_t index_ = 0;
};

/// Lexicographic decidability metric.
using Metric = std::pair<std::size_t, std::size_t>;

/// Throws InvariantViolation unless child < parent. A null parent marks the
/// root of a derivation.
void check_descent(Session &s, const Metric *parent, const Metric &child,
                   const char *rule);

}  // namespace polarf
