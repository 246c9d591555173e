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

#include "polarf/context.hpp"
#include "polarf/session.hpp"
#include "polarf/syntax.hpp"

namespace polarf {

// Algorithmic subtyping. Each judgment takes the input context and returns
// the output context, which has the same entries with possibly more
// existentials solved. Preconditions: theta well-formed, the ground side
// (left for positive judgments, right for negative ones) ground, and the
// other side already applied to theta. A failed judgment throws
// TypeError(ErrorKind::SubtypeFailure) naming the first failing subgoal.

AlgContext subtype_pos(Session &s, const AlgContext &theta, const PosRef &p,
                       const PosRef &q);
AlgContext subtype_neg(Session &s, const AlgContext &theta, const NegRef &n,
                       const NegRef &m);
/// Dispatches on polarity; mismatched polarities fail.
AlgContext subtype(Session &s, const AlgContext &theta, const Type &a,
                   const Type &b);

/// Subtyping in both directions, for ground types.
bool isomorphic(Session &s, const AlgContext &theta, const Type &a,
                const Type &b);
bool isomorphic(const AlgContext &theta, const Type &a, const Type &b);

}  // namespace polarf
