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
#include <utility>
#include <variant>
#include <vector>

#include "polarf/syntax.hpp"
#include "polarf/types.hpp"

namespace polarf {

struct Universal {
  std::string name;
};
struct Unsolved {
  std::string name;
};
struct Solved {
  std::string name;
  PosRef solution;
};

using ContextEntry = std::variant<Universal, Unsolved, Solved>;

const std::string &entry_name(const ContextEntry &e);
bool is_existential(const ContextEntry &e);

/// Ordered algorithmic context: universal variables interleaved with solved
/// and unsolved existential variables. Universal and existential names live
/// in separate namespaces; within each namespace names are unique.
class AlgContext {
 public:
  AlgContext() = default;
  explicit AlgContext(std::vector<ContextEntry> entries)
      : entries_(std::move(entries)) {}

  const std::vector<ContextEntry> &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  void push(ContextEntry e) { entries_.push_back(std::move(e)); }
  void pop() { entries_.pop_back(); }
  const ContextEntry &back() const { return entries_.back(); }

  bool has_universal(const std::string &name) const;
  bool has_existential(const std::string &name) const;
  std::optional<std::size_t> find_existential(const std::string &name) const;

  /// Solution of `name`, or nullptr when unsolved or absent.
  const PosRef *solution(const std::string &name) const;

  /// Universal names in context order (the erased declarative context).
  std::vector<std::string> universals() const;
  /// Universal names strictly before position `index`.
  NameSet universals_before(std::size_t index) const;
  NameSet existentials() const;
  NameSet unsolved() const;

  /// No unsolved existentials.
  bool complete() const;

  /// Same entries, same order, alpha-equal solutions.
  bool operator==(const AlgContext &other) const;

 private:
  std::vector<ContextEntry> entries_;
};

/// Declarative context: universal variables only.
using DeclContext = std::vector<std::string>;

class TypeEnv {
 public:
  using Binding = std::pair<std::string, PosRef>;

  TypeEnv() = default;
  explicit TypeEnv(std::vector<Binding> bindings)
      : bindings_(std::move(bindings)) {}

  const std::vector<Binding> &bindings() const { return bindings_; }
  /// Innermost binding wins.
  const PosRef *lookup(const std::string &name) const;
  TypeEnv extended(std::string name, PosRef type) const;

 private:
  std::vector<Binding> bindings_;
};

/// Free existentials of a context: its unsolved entries together with every
/// existential mentioned by a solution.
NameSet free_evars(const AlgContext &theta);

/// [theta]A: replaces every solved existential by its solution.
PosRef apply_context(const AlgContext &theta, const PosRef &t);
NegRef apply_context(const AlgContext &theta, const NegRef &t);
Type apply_context(const AlgContext &theta, const Type &t);

/// theta_prime restricted to the existentials of theta. Throws
/// InvariantViolation if the universal skeletons disagree.
AlgContext restrict_context(const AlgContext &theta_prime,
                            const AlgContext &theta);

/// Drops every existential entry.
DeclContext erase_context(const AlgContext &theta);

/// Context extension: same shape, possibly more solutions, existing
/// solutions replaced only by isomorphic ones.
bool extends(const AlgContext &theta, const AlgContext &theta_prime);

/// Weak extension: as `extends`, and theta_prime may also contain
/// existential entries that theta lacks.
bool weak_extends(const AlgContext &theta, const AlgContext &theta_prime);

/// Same entry names and kinds in the same order (solutions ignored except
/// that a solved entry may replace an unsolved one).
bool same_shape(const AlgContext &a, const AlgContext &b);

}  // namespace polarf
