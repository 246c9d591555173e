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

#include "polarf/types.hpp"

#include <algorithm>
#include <utility>

namespace polarf {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// ----------------------------------------------------------------------------
// Alpha-equivalence
// ----------------------------------------------------------------------------

using Binders = std::vector<std::string>;

// Distance from the innermost binder, or -1 when free.
long bound_index(const Binders &binders, const std::string &name) {
  for (std::size_t i = binders.size(); i-- > 0;)
    if (binders[i] == name) return static_cast<long>(binders.size() - 1 - i);
  return -1;
}

bool eq(const PosRef &a, const PosRef &b, Binders &ba, Binders &bb);
bool eq(const NegRef &a, const NegRef &b, Binders &ba, Binders &bb);

bool eq_args(const std::vector<PosRef> &xs, const std::vector<PosRef> &ys,
             Binders &ba, Binders &bb) {
  if (xs.size() != ys.size()) return false;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (!eq(xs[i], ys[i], ba, bb)) return false;
  return true;
}

bool eq(const PosRef &a, const PosRef &b, Binders &ba, Binders &bb) {
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const UVar &x) {
            const auto &y = std::get<UVar>(b->node);
            long ia = bound_index(ba, x.name);
            long ib = bound_index(bb, y.name);
            if (ia != ib) return false;
            return ia >= 0 || x.name == y.name;
          },
          [&](const EVar &x) { return x.name == std::get<EVar>(b->node).name; },
          [&](const Down &x) {
            return eq(x.body, std::get<Down>(b->node).body, ba, bb);
          },
          [&](const Data &x) {
            const auto &y = std::get<Data>(b->node);
            return x.ctor == y.ctor && eq_args(x.args, y.args, ba, bb);
          },
      },
      a->node);
}

bool eq(const NegRef &a, const NegRef &b, Binders &ba, Binders &bb) {
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const Arrow &x) {
            const auto &y = std::get<Arrow>(b->node);
            return eq(x.domain, y.domain, ba, bb) &&
                   eq(x.codomain, y.codomain, ba, bb);
          },
          [&](const Forall &x) {
            const auto &y = std::get<Forall>(b->node);
            ba.push_back(x.binder);
            bb.push_back(y.binder);
            bool r = eq(x.body, y.body, ba, bb);
            ba.pop_back();
            bb.pop_back();
            return r;
          },
          [&](const Up &x) {
            return eq(x.body, std::get<Up>(b->node).body, ba, bb);
          },
          [&](const NegData &x) {
            const auto &y = std::get<NegData>(b->node);
            return x.ctor == y.ctor && eq_args(x.args, y.args, ba, bb);
          },
      },
      a->node);
}

// ----------------------------------------------------------------------------
// Canonical keys
// ----------------------------------------------------------------------------

void key(const PosRef &t, Binders &bs, std::string &out);
void key(const NegRef &t, Binders &bs, std::string &out);

void key_args(const std::vector<PosRef> &args, Binders &bs, std::string &out) {
  for (const auto &a : args) {
    out += ' ';
    key(a, bs, out);
  }
}

void key(const PosRef &t, Binders &bs, std::string &out) {
  std::visit(overloaded{
                 [&](const UVar &x) {
                   long i = bound_index(bs, x.name);
                   if (i >= 0)
                     out += "#" + std::to_string(i);
                   else
                     out += "u:" + x.name;
                 },
                 [&](const EVar &x) { out += "e:" + x.name; },
                 [&](const Down &x) {
                   out += "(dn ";
                   key(x.body, bs, out);
                   out += ')';
                 },
                 [&](const Data &x) {
                   out += "(D:" + x.ctor;
                   key_args(x.args, bs, out);
                   out += ')';
                 },
             },
             t->node);
}

void key(const NegRef &t, Binders &bs, std::string &out) {
  std::visit(overloaded{
                 [&](const Arrow &x) {
                   out += "(";
                   key(x.domain, bs, out);
                   out += " -> ";
                   key(x.codomain, bs, out);
                   out += ')';
                 },
                 [&](const Forall &x) {
                   out += "(all. ";
                   bs.push_back(x.binder);
                   key(x.body, bs, out);
                   bs.pop_back();
                   out += ')';
                 },
                 [&](const Up &x) {
                   out += "(up ";
                   key(x.body, bs, out);
                   out += ')';
                 },
                 [&](const NegData &x) {
                   out += "(N:" + x.ctor;
                   key_args(x.args, bs, out);
                   out += ')';
                 },
             },
             t->node);
}

// ----------------------------------------------------------------------------
// Free variables
// ----------------------------------------------------------------------------

void collect_evars(const PosRef &t, NameSet &out);
void collect_evars(const NegRef &t, NameSet &out);

void collect_evars(const PosRef &t, NameSet &out) {
  std::visit(overloaded{
                 [](const UVar &) {},
                 [&](const EVar &x) { out.insert(x.name); },
                 [&](const Down &x) { collect_evars(x.body, out); },
                 [&](const Data &x) {
                   for (const auto &a : x.args) collect_evars(a, out);
                 },
             },
             t->node);
}

void collect_evars(const NegRef &t, NameSet &out) {
  std::visit(overloaded{
                 [&](const Arrow &x) {
                   collect_evars(x.domain, out);
                   collect_evars(x.codomain, out);
                 },
                 [&](const Forall &x) { collect_evars(x.body, out); },
                 [&](const Up &x) { collect_evars(x.body, out); },
                 [&](const NegData &x) {
                   for (const auto &a : x.args) collect_evars(a, out);
                 },
             },
             t->node);
}

void collect_uvars(const PosRef &t, Binders &bs, NameSet &out);
void collect_uvars(const NegRef &t, Binders &bs, NameSet &out);

void collect_uvars(const PosRef &t, Binders &bs, NameSet &out) {
  std::visit(overloaded{
                 [&](const UVar &x) {
                   if (bound_index(bs, x.name) < 0) out.insert(x.name);
                 },
                 [](const EVar &) {},
                 [&](const Down &x) { collect_uvars(x.body, bs, out); },
                 [&](const Data &x) {
                   for (const auto &a : x.args) collect_uvars(a, bs, out);
                 },
             },
             t->node);
}

void collect_uvars(const NegRef &t, Binders &bs, NameSet &out) {
  std::visit(overloaded{
                 [&](const Arrow &x) {
                   collect_uvars(x.domain, bs, out);
                   collect_uvars(x.codomain, bs, out);
                 },
                 [&](const Forall &x) {
                   bs.push_back(x.binder);
                   collect_uvars(x.body, bs, out);
                   bs.pop_back();
                 },
                 [&](const Up &x) { collect_uvars(x.body, bs, out); },
                 [&](const NegData &x) {
                   for (const auto &a : x.args) collect_uvars(a, bs, out);
                 },
             },
             t->node);
}

// ----------------------------------------------------------------------------
// Substitution
// ----------------------------------------------------------------------------

// Replaces universal variables (uvars) and existential variables (evars)
// simultaneously. `replacement_fuv` holds the free universals of every
// replacement, which binders must not capture.
struct Substituter {
  std::map<std::string, PosRef> uvars;
  const EvarSolutions *evars = nullptr;
  NameSet replacement_fuv;

  PosRef pos(const PosRef &t) const {
    return std::visit(
        overloaded{
            [&](const UVar &x) -> PosRef {
              auto it = uvars.find(x.name);
              return it == uvars.end() ? t : it->second;
            },
            [&](const EVar &x) -> PosRef {
              if (evars == nullptr) return t;
              auto it = evars->find(x.name);
              return it == evars->end() ? t : it->second;
            },
            [&](const Down &x) -> PosRef {
              NegRef body = neg(x.body);
              return body == x.body ? t : down(std::move(body));
            },
            [&](const Data &x) -> PosRef {
              bool changed = false;
              std::vector<PosRef> args = map_args(x.args, changed);
              return changed ? data(x.ctor, std::move(args)) : t;
            },
        },
        t->node);
  }

  std::vector<PosRef> map_args(const std::vector<PosRef> &args,
                               bool &changed) const {
    std::vector<PosRef> out;
    out.reserve(args.size());
    for (const auto &a : args) {
      out.push_back(pos(a));
      changed = changed || out.back() != a;
    }
    return out;
  }

  NegRef neg(const NegRef &t) const {
    return std::visit(
        overloaded{
            [&](const Arrow &x) -> NegRef {
              PosRef d = pos(x.domain);
              NegRef c = neg(x.codomain);
              return d == x.domain && c == x.codomain ? t
                                                      : arrow(std::move(d),
                                                              std::move(c));
            },
            [&](const Forall &x) -> NegRef { return under_binder(t, x); },
            [&](const Up &x) -> NegRef {
              PosRef body = pos(x.body);
              return body == x.body ? t : up(std::move(body));
            },
            [&](const NegData &x) -> NegRef {
              bool changed = false;
              std::vector<PosRef> args = map_args(x.args, changed);
              return changed ? neg_data(x.ctor, std::move(args)) : t;
            },
        },
        t->node);
  }

  NegRef under_binder(const NegRef &t, const Forall &x) const {
    Substituter inner = *this;
    inner.uvars.erase(x.binder);
    if (inner.uvars.empty() && (evars == nullptr || evars->empty())) return t;
    std::string binder = x.binder;
    if (replacement_fuv.count(binder) != 0) {
      NameSet avoid = replacement_fuv;
      NameSet body_fuv = free_uvars(x.body);
      avoid.insert(body_fuv.begin(), body_fuv.end());
      for (const auto &[k, _] : inner.uvars) avoid.insert(k);
      binder = fresh_variant(x.binder, avoid);
      inner.uvars[x.binder] = uvar(binder);
      inner.replacement_fuv.insert(binder);
    }
    NegRef body = inner.neg(x.body);
    if (body == x.body && binder == x.binder) return t;
    return forall(std::move(binder), std::move(body));
  }
};

// ----------------------------------------------------------------------------
// Sizes
// ----------------------------------------------------------------------------

std::size_t args_size(const std::vector<PosRef> &args) {
  std::size_t n = 0;
  for (const auto &a : args) n += termsize(a);
  return n;
}

void subterms(const PosRef &t, std::vector<PosRef> &out);
void subterms(const NegRef &t, std::vector<PosRef> &out);

void subterms(const PosRef &t, std::vector<PosRef> &out) {
  out.push_back(t);
  std::visit(overloaded{
                 [](const UVar &) {},
                 [](const EVar &) {},
                 [&](const Down &x) { subterms(x.body, out); },
                 [&](const Data &x) {
                   for (const auto &a : x.args) subterms(a, out);
                 },
             },
             t->node);
}

void subterms(const NegRef &t, std::vector<PosRef> &out) {
  std::visit(overloaded{
                 [&](const Arrow &x) {
                   subterms(x.domain, out);
                   subterms(x.codomain, out);
                 },
                 [&](const Forall &x) { subterms(x.body, out); },
                 [&](const Up &x) { subterms(x.body, out); },
                 [&](const NegData &x) {
                   for (const auto &a : x.args) subterms(a, out);
                 },
             },
             t->node);
}

// ----------------------------------------------------------------------------
// Renaming type variables inside terms
// ----------------------------------------------------------------------------

void type_names(const PosRef &t, NameSet &out);
void type_names(const NegRef &t, NameSet &out) {
  std::visit(overloaded{
                 [&](const Arrow &x) {
                   type_names(x.domain, out);
                   type_names(x.codomain, out);
                 },
                 [&](const Forall &x) {
                   out.insert(x.binder);
                   type_names(x.body, out);
                 },
                 [&](const Up &x) { type_names(x.body, out); },
                 [&](const NegData &x) {
                   for (const auto &a : x.args) type_names(a, out);
                 },
             },
             t->node);
}
void type_names(const PosRef &t, NameSet &out) {
  std::visit(overloaded{
                 [&](const UVar &x) { out.insert(x.name); },
                 [](const EVar &) {},
                 [&](const Down &x) { type_names(x.body, out); },
                 [&](const Data &x) {
                   for (const auto &a : x.args) type_names(a, out);
                 },
             },
             t->node);
}

void type_names(const ValueRef &v, NameSet &out);
void type_names(const CompRef &c, NameSet &out) {
  std::visit(overloaded{
                 [&](const Lambda &x) {
                   type_names(x.annotation, out);
                   type_names(x.body, out);
                 },
                 [&](const TypeAbs &x) {
                   out.insert(x.binder);
                   type_names(x.body, out);
                 },
                 [&](const Return &x) { type_names(x.value, out); },
                 [&](const LetAnn &x) {
                   type_names(x.annotation, out);
                   type_names(x.head, out);
                   for (const auto &a : x.args) type_names(a, out);
                   type_names(x.cont, out);
                 },
                 [&](const Let &x) {
                   type_names(x.head, out);
                   for (const auto &a : x.args) type_names(a, out);
                   type_names(x.cont, out);
                 },
             },
             c->node);
}
void type_names(const ValueRef &v, NameSet &out) {
  std::visit(overloaded{
                 [&](const ThunkValue &x) { type_names(x.body, out); },
                 [&](const PairValue &x) {
                   type_names(x.first, out);
                   type_names(x.second, out);
                 },
                 [](const auto &) {},
             },
             v->node);
}

ArgList rename_args(const ArgList &args, const std::string &from,
                    const std::string &to) {
  ArgList out;
  out.reserve(args.size());
  for (const auto &a : args) out.push_back(rename_type_var(a, from, to));
  return out;
}

}  // namespace

bool alpha_equal(const PosRef &a, const PosRef &b) {
  if (a == b) return true;
  Binders ba, bb;
  return eq(a, b, ba, bb);
}

bool alpha_equal(const NegRef &a, const NegRef &b) {
  if (a == b) return true;
  Binders ba, bb;
  return eq(a, b, ba, bb);
}

bool alpha_equal(const Type &a, const Type &b) {
  if (a.index() != b.index()) return false;
  if (const auto *p = std::get_if<PosRef>(&a))
    return alpha_equal(*p, std::get<PosRef>(b));
  return alpha_equal(std::get<NegRef>(a), std::get<NegRef>(b));
}

std::string canonical_key(const PosRef &t) {
  Binders bs;
  std::string out = "+";
  key(t, bs, out);
  return out;
}

std::string canonical_key(const NegRef &t) {
  Binders bs;
  std::string out = "-";
  key(t, bs, out);
  return out;
}

std::string canonical_key(const Type &t) {
  return std::visit([](const auto &x) { return canonical_key(x); }, t);
}

NameSet free_evars(const PosRef &t) {
  NameSet out;
  collect_evars(t, out);
  return out;
}

NameSet free_evars(const NegRef &t) {
  NameSet out;
  collect_evars(t, out);
  return out;
}

NameSet free_evars(const Type &t) {
  return std::visit([](const auto &x) { return free_evars(x); }, t);
}

NameSet free_uvars(const PosRef &t) {
  NameSet out;
  Binders bs;
  collect_uvars(t, bs, out);
  return out;
}

NameSet free_uvars(const NegRef &t) {
  NameSet out;
  Binders bs;
  collect_uvars(t, bs, out);
  return out;
}

NameSet free_uvars(const Type &t) {
  return std::visit([](const auto &x) { return free_uvars(x); }, t);
}

std::string fresh_variant(const std::string &base, const NameSet &avoid) {
  std::string candidate = base + "'";
  while (avoid.count(candidate) != 0) candidate += "'";
  return candidate;
}

PosRef subst_type(const PosRef &replacement, const std::string &alpha,
                  const PosRef &target) {
  Substituter s;
  s.uvars.emplace(alpha, replacement);
  s.replacement_fuv = free_uvars(replacement);
  return s.pos(target);
}

NegRef subst_type(const PosRef &replacement, const std::string &alpha,
                  const NegRef &target) {
  Substituter s;
  s.uvars.emplace(alpha, replacement);
  s.replacement_fuv = free_uvars(replacement);
  return s.neg(target);
}

namespace {
Substituter evar_substituter(const EvarSolutions &solutions) {
  Substituter s;
  s.evars = &solutions;
  for (const auto &[_, p] : solutions) {
    NameSet f = free_uvars(p);
    s.replacement_fuv.insert(f.begin(), f.end());
  }
  return s;
}
}  // namespace

PosRef subst_evars(const EvarSolutions &solutions, const PosRef &target) {
  if (solutions.empty()) return target;
  return evar_substituter(solutions).pos(target);
}

NegRef subst_evars(const EvarSolutions &solutions, const NegRef &target) {
  if (solutions.empty()) return target;
  return evar_substituter(solutions).neg(target);
}

std::size_t termsize(const PosRef &t) {
  return std::visit(overloaded{
                        [](const UVar &) -> std::size_t { return 1; },
                        [](const EVar &) -> std::size_t { return 1; },
                        [](const Down &x) { return termsize(x.body) + 1; },
                        [](const Data &x) { return args_size(x.args) + 1; },
                    },
                    t->node);
}

std::size_t termsize(const NegRef &t) {
  return std::visit(
      overloaded{
          [](const Arrow &x) {
            return termsize(x.domain) + termsize(x.codomain) + 1;
          },
          [](const Forall &x) { return termsize(x.body); },
          [](const Up &x) { return termsize(x.body) + 1; },
          [](const NegData &x) { return args_size(x.args) + 1; },
      },
      t->node);
}

std::size_t termsize(const Type &t) {
  return std::visit([](const auto &x) { return termsize(x); }, t);
}

std::size_t num_prenex(const PosRef &) { return 0; }

std::size_t num_prenex(const NegRef &t) {
  if (const auto *f = as<Forall>(t)) return 1 + num_prenex(f->body);
  return 0;
}

std::size_t num_prenex(const Type &t) {
  return std::visit([](const auto &x) { return num_prenex(x); }, t);
}

std::vector<PosRef> positive_subterms(const Type &t) {
  std::vector<PosRef> out;
  std::visit([&](const auto &x) { subterms(x, out); }, t);
  return out;
}

std::size_t term_size(const ValueRef &v) {
  return std::visit(
      overloaded{
          [](const ThunkValue &x) { return 1 + term_size(x.body); },
          [](const PairValue &x) {
            return 1 + term_size(x.first) + term_size(x.second);
          },
          [](const auto &) -> std::size_t { return 1; },
      },
      v->node);
}

std::size_t term_size(const ArgList &s) {
  std::size_t n = 0;
  for (const auto &v : s) n += term_size(v);
  return n;
}

std::size_t term_size(const CompRef &c) {
  return std::visit(
      overloaded{
          [](const Lambda &x) { return 1 + term_size(x.body); },
          [](const TypeAbs &x) { return 1 + term_size(x.body); },
          [](const Return &x) { return 1 + term_size(x.value); },
          [](const LetAnn &x) {
            return 1 + term_size(x.head) + term_size(x.args) +
                   term_size(x.cont);
          },
          [](const Let &x) {
            return 1 + term_size(x.head) + term_size(x.args) +
                   term_size(x.cont);
          },
      },
      c->node);
}

ValueRef rename_type_var(const ValueRef &v, const std::string &from,
                         const std::string &to) {
  return std::visit(
      overloaded{
          [&](const ThunkValue &x) {
            return thunk_value(rename_type_var(x.body, from, to), v->span);
          },
          [&](const PairValue &x) {
            return pair_value(rename_type_var(x.first, from, to),
                              rename_type_var(x.second, from, to), v->span);
          },
          [&](const auto &) { return v; },
      },
      v->node);
}

CompRef rename_type_var(const CompRef &c, const std::string &from,
                        const std::string &to) {
  PosRef target = uvar(to);
  return std::visit(
      overloaded{
          [&](const Lambda &x) {
            return lambda(x.param, subst_type(target, from, x.annotation),
                          rename_type_var(x.body, from, to), c->span);
          },
          [&](const TypeAbs &x) -> CompRef {
            if (x.binder == from) return c;
            if (x.binder == to) {
              // The inner binder would capture the new name; move it aside.
              NameSet avoid;
              type_names(x.body, avoid);
              avoid.insert(from);
              avoid.insert(to);
              std::string moved = fresh_variant(x.binder, avoid);
              CompRef body = rename_type_var(x.body, x.binder, moved);
              return type_abs(moved, rename_type_var(body, from, to), c->span);
            }
            return type_abs(x.binder, rename_type_var(x.body, from, to),
                            c->span);
          },
          [&](const Return &x) {
            return return_comp(rename_type_var(x.value, from, to), c->span);
          },
          [&](const LetAnn &x) {
            return let_ann(x.name, subst_type(target, from, x.annotation),
                           rename_type_var(x.head, from, to),
                           rename_args(x.args, from, to),
                           rename_type_var(x.cont, from, to), c->span);
          },
          [&](const Let &x) {
            return let_plain(x.name, rename_type_var(x.head, from, to),
                             rename_args(x.args, from, to),
                             rename_type_var(x.cont, from, to), c->span);
          },
      },
      c->node);
}

}  // namespace polarf
