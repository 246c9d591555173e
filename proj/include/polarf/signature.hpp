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

#include <map>
#include <optional>
#include <string>

#include "polarf/syntax.hpp"

namespace polarf {

struct DatatypeInfo {
  Polarity polarity = Polarity::Positive;
  std::size_t arity = 0;
};

/// Datatype constructors in scope. Int, Bool and the product are built in.
class Signature {
 public:
  /// Signature holding only the built-in constructors.
  static Signature builtin();

  static bool is_builtin(const std::string &name);

  /// False if `name` is already declared.
  bool declare(const std::string &name, DatatypeInfo info);
  std::optional<DatatypeInfo> lookup(const std::string &name) const;
  const std::map<std::string, DatatypeInfo> &entries() const { return entries_; }

 private:
  std::map<std::string, DatatypeInfo> entries_;
};

}  // namespace polarf
