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

#include "polarf/error.hpp"

#include <utility>

namespace polarf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::IllFormed: return "ill-formed";
    case ErrorKind::UnboundVariable: return "unbound-variable";
    case ErrorKind::SubtypeFailure: return "subtype-failure";
    case ErrorKind::AmbiguousLet: return "ambiguous-let";
    case ErrorKind::Arity: return "arity";
    case ErrorKind::Shape: return "shape";
  }
  return "unknown";
}

TypeError::TypeError(ErrorKind kind, std::string message, SourceSpan span)
    : std::runtime_error(message),
      kind_(kind),
      message_(std::move(message)),
      span_(std::move(span)) {}

}  // namespace polarf
