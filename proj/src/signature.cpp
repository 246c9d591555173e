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


#include "polarf/signature.hpp"

namespace polarf {

Signature Signature::builtin() {
  Signature sig;
  sig.entries_[kIntCtor] = {Polarity::Positive, 0};
  sig.entries_[kBoolCtor] = {Polarity::Positive, 0};
  sig.entries_[kProductCtor] = {Polarity::Positive, 2};
  return sig;
}

bool Signature::is_builtin(const std::string &name) {
  return name == kIntCtor || name == kBoolCtor || name == kProductCtor;
}

bool Signature::declare(const std::string &name, DatatypeInfo info) {
  return entries_.emplace(name, info).second;
}

std::optional<DatatypeInfo> Signature::lookup(const std::string &name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

}  // namespace polarf
