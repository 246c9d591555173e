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


#include "polarf/pretty.hpp"

namespace polarf {

namespace {

// Precedence levels, loosest first.
enum Level { kAny = 0, kProd = 1, kApp = 2, kAtom = 3 };

std::string pos(const PosRef &t, int need);
std::string neg(const NegRef &t, int need);

std::string wrap(std::string s, int have, int need) {
  return have < need ? "(" + s + ")" : s;
}

std::string ctor_app(const std::string &ctor, const std::vector<PosRef> &args,
                     int need) {
  if (args.empty()) return ctor;
  std::string s = ctor;
  for (const auto &a : args) s += " " + pos(a, kAtom);
  return wrap(s, kApp, need);
}

std::string pos(const PosRef &t, int need) {
  if (const auto *x = as<UVar>(t)) return x->name;
  if (const auto *x = as<EVar>(t)) return "^" + x->name;
  if (const auto *x = as<Down>(t)) return wrap("dn " + neg(x->body, kAtom), kApp, need);
  const auto &d = std::get<Data>(t->node);
  if (d.ctor == kProductCtor && d.args.size() == 2)
    return wrap(pos(d.args[0], kApp) + " * " + pos(d.args[1], kProd), kProd, need);
  return ctor_app(d.ctor, d.args, need);
}

std::string neg(const NegRef &t, int need) {
  if (as<Forall>(t)) {
    std::string s = "forall";
    NegRef cur = t;
    while (const auto *f = as<Forall>(cur)) {
      s += " " + f->binder;
      cur = f->body;
    }
    return wrap(s + ". " + neg(cur, kAny), kAny, need);
  }
  if (const auto *x = as<Arrow>(t))
    return wrap(pos(x->domain, kProd) + " -> " + neg(x->codomain, kAny), kAny, need);
  if (const auto *x = as<Up>(t)) return wrap("up " + pos(x->body, kAtom), kApp, need);
  const auto &d = std::get<NegData>(t->node);
  return ctor_app(d.ctor, d.args, need);
}

}  // namespace

std::string pretty(const PosRef &t) { return pos(t, kAny); }
std::string pretty(const NegRef &t) { return neg(t, kAny); }
std::string pretty(const Type &t) {
  return std::visit([](const auto &x) { return pretty(x); }, t);
}

std::string pretty(const ValueRef &v) {
  if (const auto *x = as<VarValue>(v)) return x->name;
  if (const auto *x = as<ThunkValue>(v)) return "{" + pretty(x->body) + "}";
  if (const auto *x = as<IntValue>(v)) return std::to_string(x->value);
  if (const auto *x = as<BoolValue>(v)) return x->value ? "true" : "false";
  const auto &p = std::get<PairValue>(v->node);
  return "(" + pretty(p.first) + ", " + pretty(p.second) + ")";
}

std::string pretty(const ArgList &s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += pretty(s[i]);
  }
  return out + ")";
}

std::string pretty(const CompRef &c) {
  if (const auto *x = as<Lambda>(c))
    return "\\" + x->param + " : " + pretty(x->annotation) + ". " + pretty(x->body);
  if (const auto *x = as<TypeAbs>(c)) return "/\\" + x->binder + ". " + pretty(x->body);
  if (const auto *x = as<Return>(c)) return "return " + pretty(x->value);
  if (const auto *x = as<LetAnn>(c))
    return "let " + x->name + " : " + pretty(x->annotation) + " = " +
           pretty(x->head) + pretty(x->args) + "; " + pretty(x->cont);
  const auto &l = std::get<Let>(c->node);
  return "let " + l.name + " = " + pretty(l.head) + pretty(l.args) + "; " +
         pretty(l.cont);
}

std::string pretty(const AlgContext &theta) {
  if (theta.empty()) return ".";
  std::string out;
  for (const auto &e : theta.entries()) {
    if (!out.empty()) out += ", ";
    if (const auto *u = std::get_if<Universal>(&e)) {
      out += u->name;
    } else if (const auto *x = std::get_if<Unsolved>(&e)) {
      out += "^" + x->name;
    } else {
      const auto &s = std::get<Solved>(e);
      out += "^" + s.name + " = " + pretty(s.solution);
    }
  }
  return out;
}

std::string pretty(const Program &p) {
  std::string out;
  for (const auto &d : p.datatypes)
    out += "data " + d.name +
           (d.info.polarity == Polarity::Positive ? " pos " : " neg ") +
           std::to_string(d.info.arity) + "\n";
  for (const auto &a : p.assumptions) out += "val " + a.name + " : " + pretty(a.type) + "\n";
  out += "run " + pretty(p.body) + "\n";
  return out;
}

}  // namespace polarf
