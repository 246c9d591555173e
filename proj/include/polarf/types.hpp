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
#include <map>
#include <set>
#include <string>
#include <vector>

#include "polarf/syntax.hpp"

namespace polarf {

using NameSet = std::set<std::string>;

// Alpha-equivalence. Bound variables are compared by binding position.
bool alpha_equal(const PosRef &a, const PosRef &b);
bool alpha_equal(const NegRef &a, const NegRef &b);
bool alpha_equal(const Type &a, const Type &b);

/// Nameless rendering of a type: two types have the same key iff they are
/// alpha-equivalent. Used for memo tables and deduplication.
std::string canonical_key(const PosRef &t);
std::string canonical_key(const NegRef &t);
std::string canonical_key(const Type &t);

NameSet free_evars(const PosRef &t);
NameSet free_evars(const NegRef &t);
NameSet free_evars(const Type &t);

NameSet free_uvars(const PosRef &t);
NameSet free_uvars(const NegRef &t);
NameSet free_uvars(const Type &t);

inline bool is_ground(const PosRef &t) { return free_evars(t).empty(); }
inline bool is_ground(const NegRef &t) { return free_evars(t).empty(); }
inline bool is_ground(const Type &t) { return free_evars(t).empty(); }

/// Returns a variant of `base` (base', base'', ...) not contained in `avoid`.
std::string fresh_variant(const std::string &base, const NameSet &avoid);

/// Capture-avoiding [replacement/alpha]target for a universal variable alpha.
PosRef subst_type(const PosRef &replacement, const std::string &alpha,
                  const PosRef &target);
NegRef subst_type(const PosRef &replacement, const std::string &alpha,
                  const NegRef &target);

/// Capture-avoiding simultaneous replacement of existential variables.
/// Existentials missing from `solutions` are left in place.
using EvarSolutions = std::map<std::string, PosRef>;
PosRef subst_evars(const EvarSolutions &solutions, const PosRef &target);
NegRef subst_evars(const EvarSolutions &solutions, const NegRef &target);

/// Quantifier-ignoring size used by the decidability metric. Constructor
/// nodes count 1 plus the size of their arguments.
std::size_t termsize(const PosRef &t);
std::size_t termsize(const NegRef &t);
std::size_t termsize(const Type &t);

/// Number of leading quantifiers.
std::size_t num_prenex(const PosRef &t);
std::size_t num_prenex(const NegRef &t);
std::size_t num_prenex(const Type &t);

/// Every positive subterm of a type, including the type itself when it is
/// positive, in pre-order. Subterms under binders keep their bound names.
std::vector<PosRef> positive_subterms(const Type &t);

// Structural sizes of terms, used to check that term recursion descends.
std::size_t term_size(const ValueRef &v);
std::size_t term_size(const CompRef &c);
std::size_t term_size(const ArgList &s);

/// Renames free occurrences of the type variable `from` to `to` in every type
/// annotation inside a computation, respecting inner type abstractions.
CompRef rename_type_var(const CompRef &c, const std::string &from,
                        const std::string &to);
ValueRef rename_type_var(const ValueRef &v, const std::string &from,
                         const std::string &to);

}  // namespace polarf
