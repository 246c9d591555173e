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
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace polarf {

enum class Polarity { Positive, Negative };

struct PosType;
struct NegType;

using PosRef = std::shared_ptr<const PosType>;
using NegRef = std::shared_ptr<const NegType>;

// ---------------------------------------------------------------------------
// Types. Positive types classify values, negative types classify
// computations. Nodes are immutable and shared.
// ---------------------------------------------------------------------------

struct UVar {
  std::string name;
};

/// Existential variable. Never produced by the parser for source programs;
/// only the checker introduces these.
struct EVar {
  std::string name;
};

struct Down {
  NegRef body;
};

/// Positive datatype constructor applied to positive arguments (Int, List a,
/// P * Q, ...).
struct Data {
  std::string ctor;
  std::vector<PosRef> args;
};

struct Arrow {
  PosRef domain;
  NegRef codomain;
};

struct Forall {
  std::string binder;
  NegRef body;
};

struct Up {
  PosRef body;
};

/// Negative datatype constructor (ST).
struct NegData {
  std::string ctor;
  std::vector<PosRef> args;
};

struct PosType {
  using Node = std::variant<UVar, EVar, Down, Data>;
  Node node;
};

struct NegType {
  using Node = std::variant<Arrow, Forall, Up, NegData>;
  Node node;
};

/// A type of either polarity.
using Type = std::variant<PosRef, NegRef>;

inline constexpr const char *kProductCtor = "*";
inline constexpr const char *kIntCtor = "Int";
inline constexpr const char *kBoolCtor = "Bool";

PosRef uvar(std::string name);
PosRef evar(std::string name);
PosRef down(NegRef body);
PosRef data(std::string ctor, std::vector<PosRef> args = {});
PosRef product(PosRef first, PosRef second);
NegRef arrow(PosRef domain, NegRef codomain);
NegRef forall(std::string binder, NegRef body);
NegRef up(PosRef body);
NegRef neg_data(std::string ctor, std::vector<PosRef> args);

/// Folds a list of binders into nested quantifiers: forall_n({a, b}, N) is
/// forall a. forall b. N.
NegRef forall_n(const std::vector<std::string> &binders, NegRef body);

template <typename T>
const T *as(const PosRef &t) {
  return std::get_if<T>(&t->node);
}
template <typename T>
const T *as(const NegRef &t) {
  return std::get_if<T>(&t->node);
}

inline Polarity polarity_of(const Type &t) {
  return std::holds_alternative<PosRef>(t) ? Polarity::Positive
                                           : Polarity::Negative;
}

// ---------------------------------------------------------------------------
// Terms.
// ---------------------------------------------------------------------------

struct SourceSpan {
  std::string file;
  std::size_t start = 0;
  std::size_t end = 0;

  bool empty() const { return start == 0 && end == 0 && file.empty(); }
};

struct Value;
struct Computation;
using ValueRef = std::shared_ptr<const Value>;
using CompRef = std::shared_ptr<const Computation>;

/// Spine: the values passed to a head all at once. Possibly empty.
using ArgList = std::vector<ValueRef>;

struct VarValue {
  std::string name;
};
struct ThunkValue {
  CompRef body;
};
struct IntValue {
  std::int64_t value;
};
struct BoolValue {
  bool value;
};
struct PairValue {
  ValueRef first;
  ValueRef second;
};

struct Value {
  using Node = std::variant<VarValue, ThunkValue, IntValue, BoolValue, PairValue>;
  Node node;
  SourceSpan span;
};

struct Lambda {
  std::string param;
  PosRef annotation;
  CompRef body;
};
struct TypeAbs {
  std::string binder;
  CompRef body;
};
struct Return {
  ValueRef value;
};
/// let x : P = v(s); t
struct LetAnn {
  std::string name;
  PosRef annotation;
  ValueRef head;
  ArgList args;
  CompRef cont;
};
/// let x = v(s); t
struct Let {
  std::string name;
  ValueRef head;
  ArgList args;
  CompRef cont;
};

struct Computation {
  using Node = std::variant<Lambda, TypeAbs, Return, LetAnn, Let>;
  Node node;
  SourceSpan span;
};

ValueRef var_value(std::string name, SourceSpan span = {});
ValueRef thunk_value(CompRef body, SourceSpan span = {});
ValueRef int_value(std::int64_t value, SourceSpan span = {});
ValueRef bool_value(bool value, SourceSpan span = {});
ValueRef pair_value(ValueRef first, ValueRef second, SourceSpan span = {});

CompRef lambda(std::string param, PosRef annotation, CompRef body,
               SourceSpan span = {});
CompRef type_abs(std::string binder, CompRef body, SourceSpan span = {});
CompRef return_comp(ValueRef value, SourceSpan span = {});
CompRef let_ann(std::string name, PosRef annotation, ValueRef head,
                ArgList args, CompRef cont, SourceSpan span = {});
CompRef let_plain(std::string name, ValueRef head, ArgList args, CompRef cont,
                  SourceSpan span = {});

template <typename T>
const T *as(const ValueRef &v) {
  return std::get_if<T>(&v->node);
}
template <typename T>
const T *as(const CompRef &c) {
  return std::get_if<T>(&c->node);
}

}  // namespace polarf
