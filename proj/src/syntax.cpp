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

#include "polarf/syntax.hpp"

#include <utility>

namespace polarf {

PosRef uvar(std::string name) {
  return std::make_shared<const PosType>(PosType{UVar{std::move(name)}});
}

PosRef evar(std::string name) {
  return std::make_shared<const PosType>(PosType{EVar{std::move(name)}});
}

PosRef down(NegRef body) {
  return std::make_shared<const PosType>(PosType{Down{std::move(body)}});
}

PosRef data(std::string ctor, std::vector<PosRef> args) {
  return std::make_shared<const PosType>(
      PosType{Data{std::move(ctor), std::move(args)}});
}

PosRef product(PosRef first, PosRef second) {
  return data(kProductCtor, {std::move(first), std::move(second)});
}

NegRef arrow(PosRef domain, NegRef codomain) {
  return std::make_shared<const NegType>(
      NegType{Arrow{std::move(domain), std::move(codomain)}});
}

NegRef forall(std::string binder, NegRef body) {
  return std::make_shared<const NegType>(
      NegType{Forall{std::move(binder), std::move(body)}});
}

NegRef up(PosRef body) {
  return std::make_shared<const NegType>(NegType{Up{std::move(body)}});
}

NegRef neg_data(std::string ctor, std::vector<PosRef> args) {
  return std::make_shared<const NegType>(
      NegType{NegData{std::move(ctor), std::move(args)}});
}

NegRef forall_n(const std::vector<std::string> &binders, NegRef body) {
  for (auto it = binders.rbegin(); it != binders.rend(); ++it)
    body = forall(*it, std::move(body));
  return body;
}

ValueRef var_value(std::string name, SourceSpan span) {
  return std::make_shared<const Value>(
      Value{VarValue{std::move(name)}, std::move(span)});
}

ValueRef thunk_value(CompRef body, SourceSpan span) {
  return std::make_shared<const Value>(
      Value{ThunkValue{std::move(body)}, std::move(span)});
}

ValueRef int_value(std::int64_t value, SourceSpan span) {
  return std::make_shared<const Value>(Value{IntValue{value}, std::move(span)});
}

ValueRef bool_value(bool value, SourceSpan span) {
  return std::make_shared<const Value>(
      Value{BoolValue{value}, std::move(span)});
}

ValueRef pair_value(ValueRef first, ValueRef second, SourceSpan span) {
  return std::make_shared<const Value>(
      Value{PairValue{std::move(first), std::move(second)}, std::move(span)});
}

CompRef lambda(std::string param, PosRef annotation, CompRef body,
               SourceSpan span) {
  return std::make_shared<const Computation>(Computation{
      Lambda{std::move(param), std::move(annotation), std::move(body)},
      std::move(span)});
}

CompRef type_abs(std::string binder, CompRef body, SourceSpan span) {
  return std::make_shared<const Computation>(Computation{
      TypeAbs{std::move(binder), std::move(body)}, std::move(span)});
}

CompRef return_comp(ValueRef value, SourceSpan span) {
  return std::make_shared<const Computation>(
      Computation{Return{std::move(value)}, std::move(span)});
}

CompRef let_ann(std::string name, PosRef annotation, ValueRef head,
                ArgList args, CompRef cont, SourceSpan span) {
  return std::make_shared<const Computation>(Computation{
      LetAnn{std::move(name), std::move(annotation), std::move(head),
             std::move(args), std::move(cont)},
      std::move(span)});
}

CompRef let_plain(std::string name, ValueRef head, ArgList args, CompRef cont,
                  SourceSpan span) {
  return std::make_shared<const Computation>(Computation{
      Let{std::move(name), std::move(head), std::move(args), std::move(cont)},
      std::move(span)});
}

}  // namespace polarf
