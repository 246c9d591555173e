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

template <typename T>
struct Synthesized {
  T type;
  AlgContext context;
};

using ValueResult = Synthesized<PosRef>;
using CompResult = Synthesized<NegRef>;
/// Spine results may mention existentials introduced by the spine; those
/// stay in the output context.
using SpineResult = Synthesized<NegRef>;

// Algorithmic synthesis. Preconditions: theta and env well-formed, lambda
// and let annotations well-formed. Failures throw TypeError; a broken
// internal invariant throws InvariantViolation.

ValueResult synth_value(Session &s, const AlgContext &theta, const TypeEnv &env,
                        const ValueRef &v);
CompResult synth_computation(Session &s, const AlgContext &theta,
                             const TypeEnv &env, const CompRef &t);
SpineResult synth_spine(Session &s, const AlgContext &theta, const TypeEnv &env,
                        const ArgList &args, const NegRef &head);

}  // namespace polarf
