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

#include "polarf/context.hpp"

#include "polarf/error.hpp"
#include "polarf/oracle.hpp"

namespace polarf {

const std::string &entry_name(const ContextEntry &e) {
  return std::visit([](const auto &x) -> const std::string & { return x.name; },
                    e);
}

bool is_existential(const ContextEntry &e) {
  return !std::holds_alternative<Universal>(e);
}

bool AlgContext::has_universal(const std::string &name) const {
  for (const auto &e : entries_)
    if (std::holds_alternative<Universal>(e) && entry_name(e) == name)
      return true;
  return false;
}

bool AlgContext::has_existential(const std::string &name) const {
  return find_existential(name).has_value();
}

std::optional<std::size_t> AlgContext::find_existential(
    const std::string &name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (is_existential(entries_[i]) && entry_name(entries_[i]) == name)
      return i;
  return std::nullopt;
}

const PosRef *AlgContext::solution(const std::string &name) const {
  for (const auto &e : entries_)
    if (const auto *s = std::get_if<Solved>(&e); s && s->name == name)
      return &s->solution;
  return nullptr;
}

std::vector<std::string> AlgContext::universals() const {
  std::vector<std::string> out;
  for (const auto &e : entries_)
    if (const auto *u = std::get_if<Universal>(&e)) out.push_back(u->name);
  return out;
}

NameSet AlgContext::universals_before(std::size_t index) const {
  NameSet out;
  for (std::size_t i = 0; i < index && i < entries_.size(); ++i)
    if (const auto *u = std::get_if<Universal>(&entries_[i]))
      out.insert(u->name);
  return out;
}

NameSet AlgContext::existentials() const {
  NameSet out;
  for (const auto &e : entries_)
    if (is_existential(e)) out.insert(entry_name(e));
  return out;
}

NameSet AlgContext::unsolved() const {
  NameSet out;
  for (const auto &e : entries_)
    if (const auto *u = std::get_if<Unsolved>(&e)) out.insert(u->name);
  return out;
}

bool AlgContext::complete() const { return unsolved().empty(); }

bool AlgContext::operator==(const AlgContext &other) const {
  if (entries_.size() != other.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto &a = entries_[i];
    const auto &b = other.entries_[i];
    if (a.index() != b.index() || entry_name(a) != entry_name(b)) return false;
    if (const auto *s = std::get_if<Solved>(&a))
      if (!alpha_equal(s->solution, std::get<Solved>(b).solution)) return false;
  }
  return true;
}

const PosRef *TypeEnv::lookup(const std::string &name) const {
  for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it)
    if (it->first == name) return &it->second;
  return nullptr;
}

TypeEnv TypeEnv::extended(std::string name, PosRef type) const {
  TypeEnv out = *this;
  out.bindings_.emplace_back(std::move(name), std::move(type));
  return out;
}

NameSet free_evars(const AlgContext &theta) {
  NameSet out;
  for (const auto &e : theta.entries()) {
    if (const auto *u = std::get_if<Unsolved>(&e)) out.insert(u->name);
    if (const auto *s = std::get_if<Solved>(&e)) {
      NameSet f = free_evars(s->solution);
      out.insert(f.begin(), f.end());
    }
  }
  return out;
}

namespace {

EvarSolutions solutions_of(const AlgContext &theta) {
  EvarSolutions out;
  for (const auto &e : theta.entries())
    if (const auto *s = std::get_if<Solved>(&e)) out.emplace(s->name, s->solution);
  return out;
}

// Solutions are ground in well-formed contexts, so one pass suffices there;
// the loop covers contexts whose solutions mention earlier existentials.
template <typename T>
T apply_solutions(const AlgContext &theta, const T &t) {
  EvarSolutions sols = solutions_of(theta);
  if (sols.empty()) return t;
  T current = t;
  for (std::size_t i = 0; i <= theta.size(); ++i) {
    T next = subst_evars(sols, current);
    if (next == current) break;
    current = next;
  }
  return current;
}

bool iso_under(const AlgContext &theta, std::size_t prefix, const PosRef &a,
               const PosRef &b) {
  if (alpha_equal(a, b)) return true;
  std::vector<std::string> decl;
  for (std::size_t i = 0; i < prefix; ++i)
    if (const auto *u = std::get_if<Universal>(&theta.entries()[i]))
      decl.push_back(u->name);
  try {
    return oracle::decl_iso(decl, a, b);
  } catch (const oracle::BudgetExceeded &) {
    return false;
  }
}

// One entry of theta against one entry of theta'. `prefix` is the position
// of the theta entry, used to erase the prefix for isomorphism checks.
bool entry_extends(const AlgContext &theta, std::size_t prefix,
                   const ContextEntry &a, const ContextEntry &b) {
  if (entry_name(a) != entry_name(b)) return false;
  if (std::holds_alternative<Universal>(a))
    return std::holds_alternative<Universal>(b);
  if (std::holds_alternative<Unsolved>(a)) return is_existential(b);
  const auto &sa = std::get<Solved>(a);
  const auto *sb = std::get_if<Solved>(&b);
  return sb != nullptr && iso_under(theta, prefix, sa.solution, sb->solution);
}

}  // namespace

PosRef apply_context(const AlgContext &theta, const PosRef &t) {
  return apply_solutions(theta, t);
}

NegRef apply_context(const AlgContext &theta, const NegRef &t) {
  return apply_solutions(theta, t);
}

Type apply_context(const AlgContext &theta, const Type &t) {
  return std::visit([&](const auto &x) -> Type { return apply_context(theta, x); },
                    t);
}

AlgContext restrict_context(const AlgContext &theta_prime,
                            const AlgContext &theta) {
  NameSet keep = theta.existentials();
  AlgContext out;
  for (const auto &e : theta_prime.entries()) {
    if (std::holds_alternative<Universal>(e) || keep.count(entry_name(e)) != 0)
      out.push(e);
  }
  if (out.size() != theta.size())
    throw InvariantViolation("context restriction: skeleton mismatch");
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto &a = out.entries()[i];
    const auto &b = theta.entries()[i];
    if (entry_name(a) != entry_name(b) || is_existential(a) != is_existential(b))
      throw InvariantViolation("context restriction: skeleton mismatch");
  }
  return out;
}

DeclContext erase_context(const AlgContext &theta) { return theta.universals(); }

bool extends(const AlgContext &theta, const AlgContext &theta_prime) {
  if (theta.size() != theta_prime.size()) return false;
  for (std::size_t i = 0; i < theta.size(); ++i)
    if (!entry_extends(theta, i, theta.entries()[i], theta_prime.entries()[i]))
      return false;
  return true;
}

bool weak_extends(const AlgContext &theta, const AlgContext &theta_prime) {
  // Walk from the right; unmatched existentials of theta' are the appended
  // entries permitted by the extra weak rules. Names are unique, so a
  // name match is the only possible pairing.
  std::size_t i = theta.size();
  std::size_t j = theta_prime.size();
  while (j > 0) {
    const auto &b = theta_prime.entries()[j - 1];
    if (i > 0) {
      const auto &a = theta.entries()[i - 1];
      if (entry_name(a) == entry_name(b) &&
          is_existential(a) == is_existential(b)) {
        if (!entry_extends(theta, i - 1, a, b)) return false;
        --i;
        --j;
        continue;
      }
    }
    if (!is_existential(b)) return false;
    --j;
  }
  return i == 0;
}

bool same_shape(const AlgContext &a, const AlgContext &b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto &x = a.entries()[i];
    const auto &y = b.entries()[i];
    if (entry_name(x) != entry_name(y) || is_existential(x) != is_existential(y))
      return false;
    if (std::holds_alternative<Solved>(x) && !std::holds_alternative<Solved>(y))
      return false;
  }
  return true;
}

}  // namespace polarf
