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
#include "polarf/signature.hpp"
#include "polarf/syntax.hpp"

namespace polarf {

// Each *_problem function returns an empty string when its argument is
// well-formed and a short reason otherwise. When `sig` is null, constructor
// names and arities are not checked.

std::string wf_type_problem(const AlgContext &theta, const Type &t,
                            const Signature *sig = nullptr);
std::string wf_context_problem(const AlgContext &theta,
                               const Signature *sig = nullptr);
std::string wf_env_problem(const AlgContext &theta, const TypeEnv &env,
                           const Signature *sig = nullptr);

inline bool wf_type(const AlgContext &theta, const Type &t,
                    const Signature *sig = nullptr) {
  return wf_type_problem(theta, t, sig).empty();
}
inline bool wf_context(const AlgContext &theta, const Signature *sig = nullptr) {
  return wf_context_problem(theta, sig).empty();
}
inline bool wf_env(const AlgContext &theta, const TypeEnv &env,
                   const Signature *sig = nullptr) {
  return wf_env_problem(theta, env, sig).empty();
}

}  // namespace polarf
