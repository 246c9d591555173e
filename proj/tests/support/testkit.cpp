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


#include "testkit.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>

#include "polarf/check.hpp"
#include "polarf/corpus.hpp"
#include "polarf/error.hpp"
#include "polarf/pretty.hpp"
#include "polarf/subtyper.hpp"
#include "polarf/typer.hpp"
#include "polarf/types.hpp"
#include "polarf/wellformed.hpp"

namespace polarf::testkit {

std::size_t Rng::below(std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
}

bool Rng::chance(double p) { return std::bernoulli_distribution(p)(engine_); }

const Signature &test_signature() {
  static const Signature sig = [] {
    Signature s = Signature::builtin();
    s.declare("String", {Polarity::Positive, 0});
    s.declare("List", {Polarity::Positive, 1});
    s.declare("ST", {Polarity::Negative, 2});
    return s;
  }();
  return sig;
}

// ---------------------------------------------------------------------------
// Measures
// ---------------------------------------------------------------------------

namespace {

std::size_t depth_of(const PosRef &t);
std::size_t depth_of(const NegRef &t);

std::size_t args_depth(const std::vector<PosRef> &args) {
  std::size_t d = 0;
  for (const auto &a : args) d = std::max(d, depth_of(a));
  return d;
}

std::size_t depth_of(const PosRef &t) {
  if (const auto *x = as<Down>(t)) return 1 + depth_of(x->body);
  if (const auto *x = as<Data>(t)) return 1 + args_depth(x->args);
  return 1;
}

std::size_t depth_of(const NegRef &t) {
  if (const auto *x = as<Arrow>(t))
    return 1 + std::max(depth_of(x->domain), depth_of(x->codomain));
  if (const auto *x = as<Forall>(t)) return depth_of(x->body);
  if (const auto *x = as<Up>(t)) return 1 + depth_of(x->body);
  return 1 + args_depth(std::get<NegData>(t->node).args);
}

std::size_t quants(const PosRef &t);
std::size_t quants(const NegRef &t);

std::size_t args_quants(const std::vector<PosRef> &args) {
  std::size_t n = 0;
  for (const auto &a : args) n += quants(a);
  return n;
}

std::size_t quants(const PosRef &t) {
  if (const auto *x = as<Down>(t)) return quants(x->body);
  if (const auto *x = as<Data>(t)) return args_quants(x->args);
  return 0;
}

std::size_t quants(const NegRef &t) {
  if (const auto *x = as<Arrow>(t)) return quants(x->domain) + quants(x->codomain);
  if (const auto *x = as<Forall>(t)) return 1 + quants(x->body);
  if (const auto *x = as<Up>(t)) return quants(x->body);
  return args_quants(std::get<NegData>(t->node).args);
}

Type subst(const PosRef &p, const std::string &alpha, const Type &t) {
  if (const auto *x = std::get_if<PosRef>(&t)) return subst_type(p, alpha, *x);
  return subst_type(p, alpha, std::get<NegRef>(t));
}

bool closed_in(const Type &t, const DeclContext &scope) {
  for (const auto &v : free_uvars(t))
    if (std::find(scope.begin(), scope.end(), v) == scope.end()) return false;
  return true;
}

}  // namespace

std::size_t type_depth(const Type &t) {
  return std::visit([](const auto &x) { return depth_of(x); }, t);
}

std::size_t quantifier_count(const Type &t) {
  return std::visit([](const auto &x) { return quants(x); }, t);
}

// ---------------------------------------------------------------------------
// Type generation
// ---------------------------------------------------------------------------

TypeGen::TypeGen(Rng &rng, std::size_t max_depth, std::size_t max_quantifiers)
    : rng_(rng), max_depth_(max_depth), max_quantifiers_(max_quantifiers) {}

PosRef TypeGen::pos(const DeclContext &scope) {
  quantifiers_ = 0;
  return pos(scope, max_depth_);
}

NegRef TypeGen::neg(const DeclContext &scope) {
  quantifiers_ = 0;
  return neg(scope, max_depth_);
}

PosRef TypeGen::leaf(const DeclContext &scope) {
  if (!scope.empty() && rng_.chance(0.55))
    return uvar(rng_.chance(0.5) ? scope.back() : rng_.pick(scope));
  return data(rng_.chance(0.5) ? kIntCtor : kBoolCtor);
}

PosRef TypeGen::pos(const DeclContext &scope, std::size_t depth) {
  if (depth <= 1) return leaf(scope);
  switch (rng_.below(10)) {
    case 0:
    case 1: return leaf(scope);
    case 2: return data("List", {pos(scope, depth - 1)});
    case 3: return product(pos(scope, depth - 1), pos(scope, depth - 1));
    default:
      if (depth >= 3) return down(neg(scope, depth - 1));
      return leaf(scope);
  }
}

NegRef TypeGen::neg(const DeclContext &scope, std::size_t depth) {
  static const std::vector<std::string> binders = {"a", "b", "c"};
  depth = std::max<std::size_t>(depth, 2);
  if (quantifiers_ < max_quantifiers_ && rng_.chance(0.4)) {
    ++quantifiers_;
    const std::string &b = rng_.pick(binders);
    DeclContext inner = scope;
    inner.push_back(b);
    return forall(b, neg(inner, depth));
  }
  if (depth == 2) {
    if (rng_.chance(0.1)) return neg_data("ST", {leaf(scope), leaf(scope)});
    return up(leaf(scope));
  }
  switch (rng_.below(10)) {
    case 0:
    case 1:
    case 2:
    case 3:
    case 4: return arrow(pos(scope, depth - 1), neg(scope, depth - 1));
    case 9: return neg_data("ST", {pos(scope, depth - 1), pos(scope, depth - 1)});
    default: return up(pos(scope, depth - 1));
  }
}

Type reverse_prenex(const Type &t) {
  if (const auto *p = std::get_if<PosRef>(&t)) {
    if (const auto *d = as<Down>(*p))
      return down(std::get<NegRef>(reverse_prenex(d->body)));
    return t;
  }
  NegRef n = std::get<NegRef>(t);
  std::vector<std::string> binders;
  while (const auto *f = as<Forall>(n)) {
    binders.push_back(f->binder);
    n = f->body;
  }
  std::reverse(binders.begin(), binders.end());
  return forall_n(binders, n);
}

// ---------------------------------------------------------------------------
// Derived judgments
// ---------------------------------------------------------------------------

namespace {

NameSet all_names(const Type &t);

void collect_names(const PosRef &t, NameSet &out);
void collect_names(const NegRef &t, NameSet &out) {
  if (const auto *x = as<Arrow>(t)) {
    collect_names(x->domain, out);
    collect_names(x->codomain, out);
  } else if (const auto *x = as<Forall>(t)) {
    out.insert(x->binder);
    collect_names(x->body, out);
  } else if (const auto *x = as<Up>(t)) {
    collect_names(x->body, out);
  } else {
    for (const auto &a : std::get<NegData>(t->node).args) collect_names(a, out);
  }
}
void collect_names(const PosRef &t, NameSet &out) {
  if (const auto *x = as<UVar>(t)) out.insert(x->name);
  else if (const auto *x = as<Down>(t)) collect_names(x->body, out);
  else if (const auto *x = as<Data>(t))
    for (const auto &a : x->args) collect_names(a, out);
}

NameSet all_names(const Type &t) {
  NameSet out;
  std::visit([&](const auto &x) { collect_names(x, out); }, t);
  return out;
}

// Renames every binder to a primed variant.
PosRef rename_binders(const PosRef &t);
NegRef rename_binders(const NegRef &t) {
  if (const auto *x = as<Arrow>(t))
    return arrow(rename_binders(x->domain), rename_binders(x->codomain));
  if (const auto *x = as<Forall>(t)) {
    NameSet avoid = all_names(Type(x->body));
    avoid.insert(x->binder);
    std::string fresh = fresh_variant(x->binder, avoid);
    return forall(fresh, rename_binders(subst_type(uvar(fresh), x->binder, x->body)));
  }
  if (const auto *x = as<Up>(t)) return up(rename_binders(x->body));
  const auto &d = std::get<NegData>(t->node);
  std::vector<PosRef> args;
  for (const auto &a : d.args) args.push_back(rename_binders(a));
  return neg_data(d.ctor, args);
}
PosRef rename_binders(const PosRef &t) {
  if (const auto *x = as<Down>(t)) return down(rename_binders(x->body));
  if (const auto *x = as<Data>(t)) {
    std::vector<PosRef> args;
    for (const auto &a : x->args) args.push_back(rename_binders(a));
    return data(x->ctor, args);
  }
  return t;
}

// Rebuilds a type, letting `fn` replace positive nodes. `fn` sees the
// binders in scope and returns null to keep descending.
using PosRewrite = std::function<PosRef(const PosRef &, const DeclContext &)>;

PosRef rewrite(const PosRef &t, const DeclContext &bound, const PosRewrite &fn);
NegRef rewrite(const NegRef &t, const DeclContext &bound, const PosRewrite &fn) {
  if (const auto *x = as<Arrow>(t))
    return arrow(rewrite(x->domain, bound, fn), rewrite(x->codomain, bound, fn));
  if (const auto *x = as<Forall>(t)) {
    DeclContext inner = bound;
    inner.push_back(x->binder);
    return forall(x->binder, rewrite(x->body, inner, fn));
  }
  if (const auto *x = as<Up>(t)) return up(rewrite(x->body, bound, fn));
  const auto &d = std::get<NegData>(t->node);
  std::vector<PosRef> args;
  for (const auto &a : d.args) args.push_back(rewrite(a, bound, fn));
  return neg_data(d.ctor, args);
}
PosRef rewrite(const PosRef &t, const DeclContext &bound, const PosRewrite &fn) {
  if (PosRef r = fn(t, bound)) return r;
  if (const auto *x = as<Down>(t)) return down(rewrite(x->body, bound, fn));
  if (const auto *x = as<Data>(t)) {
    std::vector<PosRef> args;
    for (const auto &a : x->args) args.push_back(rewrite(a, bound, fn));
    return data(x->ctor, args);
  }
  return t;
}
Type rewrite(const Type &t, const PosRewrite &fn) {
  return std::visit([&](const auto &x) -> Type { return rewrite(x, {}, fn); }, t);
}

std::size_t count_positions(const Type &t) {
  std::size_t n = 0;
  rewrite(t, [&](const PosRef &, const DeclContext &) -> PosRef {
    ++n;
    return nullptr;
  });
  return n;
}

// Replaces the k-th positive position (pre-order) with a fresh random type.
Type mutate(Rng &rng, const DeclContext &theta, const Type &t) {
  std::size_t target = rng.below(std::max<std::size_t>(count_positions(t), 1));
  std::size_t i = 0;
  return rewrite(t, [&](const PosRef &, const DeclContext &bound) -> PosRef {
    if (i++ != target) return nullptr;
    DeclContext scope = theta;
    scope.insert(scope.end(), bound.begin(), bound.end());
    TypeGen g(rng, 2, 0);
    return g.pos(scope);
  });
}

// forall c. t[c/s] for a subterm s closed in theta: below t in the
// specialization order.
Type abstract_subterm(Rng &rng, const DeclContext &theta, const NegRef &t) {
  std::vector<PosRef> closed;
  for (const auto &s : positive_subterms(Type(t)))
    if (closed_in(s, theta)) closed.push_back(s);
  if (closed.empty()) return t;
  PosRef s = rng.pick(closed);
  NameSet fv = free_uvars(s);
  NameSet avoid = all_names(Type(t));
  avoid.insert(theta.begin(), theta.end());
  std::string c = fresh_variant("c", avoid);
  NegRef body = rewrite(t, {}, [&](const PosRef &x, const DeclContext &bound) -> PosRef {
    for (const auto &b : bound)
      if (fv.count(b)) return nullptr;  // s means something else here
    if (alpha_equal(x, s) && rng.chance(0.8)) return uvar(c);
    return nullptr;
  });
  return forall(c, body);
}

Type derive_neg(Rng &rng, const DeclContext &theta, const NegRef &n, std::string &how) {
  TypeGen gen(rng);
  switch (rng.below(8)) {
    case 0:
      how = "rename";
      return rename_binders(n);
    case 1:
      if (const auto *f = as<Forall>(n)) {
        how = "instantiate";
        TypeGen small(rng, 2, 0);
        return subst_type(small.pos(theta), f->binder, f->body);
      }
      [[fallthrough]];
    case 2: {
      how = "generalize";
      NameSet avoid = all_names(Type(n));
      avoid.insert(theta.begin(), theta.end());
      return forall(fresh_variant("c", avoid), n);
    }
    case 3:
      how = "abstract";
      return abstract_subterm(rng, theta, n);
    case 4:
      how = "reverse";
      return reverse_prenex(n);
    case 5:
    case 6:
      how = "mutate";
      return mutate(rng, theta, n);
    default:
      how = "random";
      return gen.neg(theta);
  }
}

Type derive(Rng &rng, const DeclContext &theta, const Type &t, std::string &how) {
  if (const auto *n = std::get_if<NegRef>(&t)) return derive_neg(rng, theta, *n, how);
  const PosRef &p = std::get<PosRef>(t);
  if (const auto *d = as<Down>(p); d && !rng.chance(0.15))
    return down(std::get<NegRef>(derive_neg(rng, theta, d->body, how)));
  if (rng.chance(0.5)) {
    how = "mutate";
    return mutate(rng, theta, t);
  }
  how = "random";
  TypeGen gen(rng);
  return gen.pos(theta);
}

bool within_bounds(const Type &t) {
  return type_depth(t) <= 4 && quantifier_count(t) <= 3;
}

DeclContext random_theta(Rng &rng) {
  switch (rng.below(3)) {
    case 0: return {};
    case 1: return {"u"};
    default: return {"u", "v"};
  }
}

}  // namespace

SubInstance random_sub_instance(Rng &rng) {
  for (;;) {
    SubInstance inst;
    inst.theta = random_theta(rng);
    TypeGen gen(rng);
    inst.left = rng.chance(0.35) ? Type(gen.pos(inst.theta)) : Type(gen.neg(inst.theta));
    inst.right = derive(rng, inst.theta, inst.left, inst.strategy);
    if (rng.chance(0.5)) std::swap(inst.left, inst.right);
    if (within_bounds(inst.left) && within_bounds(inst.right)) return inst;
  }
}

AlgInstance random_alg_instance(Rng &rng) {
  for (;;) {
    DeclContext universals = random_theta(rng);
    std::vector<std::string> evars = {"e1"};
    if (rng.chance(0.5)) evars.push_back("e2");
    // Interleave, keeping each kind in order.
    AlgContext theta;
    std::size_t u = 0, e = 0;
    while (u < universals.size() || e < evars.size()) {
      bool take_u = e == evars.size() || (u < universals.size() && rng.chance(0.5));
      if (take_u) theta.push(Universal{universals[u++]});
      else theta.push(Unsolved{evars[e++]});
    }
    TypeGen gen(rng);
    bool positive = rng.chance(0.5);
    Type ground = positive ? Type(gen.pos(universals)) : Type(gen.neg(universals));
    std::string how;
    Type other = rng.chance(0.4) ? ground : derive(rng, universals, ground, how);
    std::size_t placed = 0;
    Type open = rewrite(other, [&](const PosRef &, const DeclContext &) -> PosRef {
      if (!rng.chance(0.3)) return nullptr;
      ++placed;
      return evar(rng.pick(evars));
    });
    if (placed == 0) continue;
    if (!within_bounds(ground) || !within_bounds(open)) continue;
    AlgInstance inst;
    inst.theta = theta;
    if (positive) {
      inst.left = ground;
      inst.right = open;
    } else {
      inst.left = open;
      inst.right = ground;
    }
    return inst;
  }
}

// ---------------------------------------------------------------------------
// Programs
// ---------------------------------------------------------------------------

const std::string &prelude_text() {
  static const std::string text = [] {
    // Every corpus fixture carries the same prelude; take it from one.
    for (const auto &e : corpus_entries()) {
      if (e.name != "c3") continue;
      return e.text.substr(0, e.text.find("\nrun")) + "\n";
    }
    return std::string();
  }();
  return text;
}

const Program &prelude() {
  static const Program p = parse_program(prelude_text() + "run return 0\n", "prelude");
  return p;
}

namespace {

TypeEnv prelude_env() {
  TypeEnv env;
  for (const auto &a : prelude().assumptions) env = env.extended(a.name, a.type);
  return env;
}

// Programs are built against the types in scope: heads are thunks, spines
// have about the right length, and arguments mostly have the right outer
// shape. The algorithmic typer is consulted only to learn the type of each
// let-bound variable for later choices; verdicts are left to the oracle.
class ProgramGen {
 public:
  explicit ProgramGen(Rng &rng) : rng_(rng) {
    for (const auto &a : prelude().assumptions) scope_.emplace_back(a.name, a.type);
    for (const char *s : {"Int", "Bool", "List Int", "Int * Bool",
                          "dn (forall a. a -> up a)", "List (dn (forall a. a -> up a))",
                          "dn (Int -> up Int)", "List Bool"})
      annotations_.push_back(parse_pos_type(s, prelude().signature));
  }

  CompRef program() {
    switch (rng_.below(10)) {
      case 0: {
        std::string x = local();
        PosRef p = annotation();
        scope_.emplace_back(x, p);
        return lambda(x, p, chain(1 + rng_.below(2)));
      }
      case 1: {
        tyvars_.push_back("t");
        std::string x = local();
        scope_.emplace_back(x, uvar("t"));
        CompRef b = chain(1 + rng_.below(2));
        tyvars_.pop_back();
        return type_abs("t", lambda(x, uvar("t"), b));
      }
      default: return chain(1 + rng_.below(3));
    }
  }

 private:
  using Binding = std::pair<std::string, PosRef>;

  std::string local() { return "x" + std::to_string(counter_++); }

  TypeEnv env() const {
    TypeEnv e;
    for (const auto &[n, t] : scope_) e = e.extended(n, t);
    return e;
  }

  PosRef annotation() {
    if (!tyvars_.empty() && rng_.chance(0.2)) return uvar(rng_.pick(tyvars_));
    if (rng_.chance(0.15)) {
      TypeGen g(rng_, 3, 1);
      return g.pos(tyvars_);
    }
    return rng_.pick(annotations_);
  }

  // Does a value of type `have` plausibly fit parameter type `want`?
  // Quantified variables of the head fit anything.
  bool fits(const PosRef &have, const PosRef &want) const {
    if (const auto *v = as<UVar>(want)) {
      if (std::find(tyvars_.begin(), tyvars_.end(), v->name) == tyvars_.end()) return true;
      return alpha_equal(have, want);
    }
    if (as<Down>(want)) return as<Down>(have) != nullptr;
    if (const auto *d = as<Data>(want)) {
      const auto *e = as<Data>(have);
      return e != nullptr && e->ctor == d->ctor;
    }
    return false;
  }

  std::vector<std::string> fitting(const PosRef &want) const {
    std::vector<std::string> out;
    for (const auto &[n, t] : scope_)
      if (want == nullptr || fits(t, want)) out.push_back(n);
    return out;
  }

  // The parameter types along the arrow chain, looking through quantifiers.
  static std::vector<PosRef> parameters(NegRef n) {
    std::vector<PosRef> out;
    for (;;) {
      if (const auto *f = as<Forall>(n)) {
        n = f->body;
      } else if (const auto *a = as<Arrow>(n)) {
        out.push_back(a->domain);
        n = a->codomain;
      } else {
        return out;
      }
    }
  }

  ValueRef thunk_for(const PosRef &want) {
    const auto *d = want ? as<Down>(want) : nullptr;
    std::vector<PosRef> params = d ? parameters(d->body) : std::vector<PosRef>{};
    std::string x = local();
    if (params.size() == 1 && rng_.chance(0.7)) {
      // A one-argument function: the identity at the parameter type when it
      // is closed, the polymorphic identity otherwise.
      if (fits(params[0], params[0]) && free_uvars(params[0]).empty())
        return thunk_value(lambda(x, params[0], return_comp(var_value(x))));
    }
    switch (rng_.below(4)) {
      case 0: return thunk_value(lambda(x, annotation(), return_comp(var_value(x))));
      case 1:
        return thunk_value(type_abs("s", lambda(x, uvar("s"), return_comp(var_value(x)))));
      case 2: return thunk_value(return_comp(argument(nullptr, false)));
      default: {
        std::string y = local();
        PosRef p = annotation();
        std::vector<std::string> fns = fitting(down(arrow(p, up(uvar("_")))));
        ValueRef f = var_value(rng_.pick(fns));
        return thunk_value(lambda(x, p, let_plain(y, f, {var_value(x)}, return_comp(var_value(y)))));
      }
    }
  }

  ValueRef argument(const PosRef &want, bool nested = true) {
    if (want && rng_.chance(0.85)) {
      const auto *d = as<Data>(want);
      std::vector<std::string> names = fitting(want);
      if (d && d->ctor == kIntCtor && (names.empty() || rng_.chance(0.5)))
        return int_value(static_cast<std::int64_t>(rng_.below(5)));
      if (d && d->ctor == kBoolCtor && (names.empty() || rng_.chance(0.5)))
        return bool_value(rng_.chance(0.5));
      if (d && d->ctor == kProductCtor && nested)
        return pair_value(argument(d->args[0], false), argument(d->args[1], false));
      if (as<Down>(want) && nested && (names.empty() || rng_.chance(0.3)))
        return thunk_for(want);
      if (!names.empty()) return var_value(rng_.pick(names));
    }
    std::size_t r = rng_.below(10);
    if (r < 5) return var_value(rng_.pick(fitting(nullptr)));
    if (r < 7) return int_value(static_cast<std::int64_t>(rng_.below(5)));
    if (r < 8) return bool_value(rng_.chance(0.5));
    if (nested && r < 9) return pair_value(argument(nullptr, false), argument(nullptr, false));
    if (nested) return thunk_for(nullptr);
    return var_value(rng_.pick(fitting(nullptr)));
  }

  // [[x]] of `let x = head(args)`, when the algorithm can type it.
  PosRef type_of(const ValueRef &head, const ArgList &args, const PosRef &annotation) {
    std::string x = "probe";
    CompRef probe = annotation ? let_ann(x, annotation, head, args, return_comp(var_value(x)))
                               : let_plain(x, head, args, return_comp(var_value(x)));
    AlgContext theta;
    for (const auto &t : tyvars_) theta.push(Universal{t});
    try {
      Session s;
      NegRef n = synth_computation(s, theta, env(), probe).type;
      if (const auto *u = as<Up>(n)) return u->body;
    } catch (const std::exception &) {
    }
    return nullptr;
  }

  struct Header {
    ValueRef head;
    ArgList args;
    PosRef annotation;
    PosRef bound;  // the variable's type, when the header types
  };

  Header header() {
    Header h;
    std::vector<PosRef> params;
    if (rng_.chance(0.9)) {
      std::vector<std::string> heads = fitting(down(up(uvar("_"))));
      const std::string &name = rng_.pick(heads);
      h.head = var_value(name);
      for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
        if (it->first == name) {
          params = parameters(as<Down>(it->second)->body);
          break;
        }
    } else {
      h.head = thunk_for(nullptr);
    }
    std::size_t count = params.size();
    if (rng_.chance(0.1)) count = rng_.chance(0.5) && count > 0 ? count - 1 : count + 1;
    for (std::size_t i = 0; i < count; ++i)
      h.args.push_back(argument(i < params.size() ? params[i] : nullptr));
    PosRef inferred = type_of(h.head, h.args, nullptr);
    if (rng_.chance(0.3) || (inferred == nullptr && rng_.chance(0.5))) {
      h.annotation = inferred && rng_.chance(0.8) ? inferred : annotation();
      h.bound = type_of(h.head, h.args, h.annotation);
    } else {
      h.bound = inferred;
    }
    return h;
  }

  CompRef chain(std::size_t remaining) {
    if (remaining == 0) {
      if (rng_.chance(0.8) && scope_.size() > prelude().assumptions.size())
        return return_comp(var_value(scope_.back().first));
      return return_comp(argument(nullptr));
    }
    // Most headers are redrawn until they type, so that whole programs are
    // often well typed; the rest are kept as drawn.
    Header h = header();
    if (rng_.chance(0.75))
      for (int attempt = 0; attempt < 6 && h.bound == nullptr; ++attempt) h = header();
    std::string x = local();
    if (h.bound) scope_.emplace_back(x, h.bound);
    CompRef cont = chain(remaining - 1);
    if (h.annotation) return let_ann(x, h.annotation, h.head, h.args, cont);
    return let_plain(x, h.head, h.args, cont);
  }

  Rng &rng_;
  std::vector<Binding> scope_;
  std::vector<PosRef> annotations_;
  DeclContext tyvars_;
  std::size_t counter_ = 0;
};

}  // namespace

CompRef random_program(Rng &rng) { return ProgramGen(rng).program(); }

// ---------------------------------------------------------------------------
// Arbitrary ASTs for the round trip
// ---------------------------------------------------------------------------

namespace {

const std::vector<std::string> kTypeNames = {"a", "b", "x", "y1", "t'", "alpha", "f_2", "Q"};
const std::vector<std::string> kTermNames = {"x", "y", "f", "g1", "k'", "list_2", "Z"};

PosRef any_pos(Rng &rng, std::size_t depth, bool evars);
NegRef any_neg(Rng &rng, std::size_t depth, bool evars) {
  if (depth == 0) return up(any_pos(rng, 0, evars));
  switch (rng.below(8)) {
    case 0:
    case 1: return arrow(any_pos(rng, depth - 1, evars), any_neg(rng, depth - 1, evars));
    case 2:
    case 3: return forall(rng.pick(kTypeNames), any_neg(rng, depth - 1, evars));
    case 4: return neg_data("ST", {any_pos(rng, depth - 1, evars), any_pos(rng, depth - 1, evars)});
    default: return up(any_pos(rng, depth - 1, evars));
  }
}

PosRef any_pos(Rng &rng, std::size_t depth, bool evars) {
  std::size_t r = rng.below(depth == 0 ? 4 : 9);
  switch (r) {
    case 0: return uvar(rng.pick(kTypeNames));
    case 1: return evars ? evar(rng.pick(kTypeNames)) : uvar(rng.pick(kTypeNames));
    case 2: return data(rng.chance(0.5) ? kIntCtor : "String");
    case 3: return data(kBoolCtor);
    case 4:
    case 5: return down(any_neg(rng, depth - 1, evars));
    case 6: return data("List", {any_pos(rng, depth - 1, evars)});
    default: return product(any_pos(rng, depth - 1, evars), any_pos(rng, depth - 1, evars));
  }
}

ValueRef any_value(Rng &rng, std::size_t depth);
CompRef any_comp(Rng &rng, std::size_t depth) {
  std::size_t r = rng.below(depth == 0 ? 1 : 6);
  switch (r) {
    case 0: return return_comp(any_value(rng, depth == 0 ? 0 : depth - 1));
    case 1: return lambda(rng.pick(kTermNames), any_pos(rng, 2, false), any_comp(rng, depth - 1));
    case 2: return type_abs(rng.pick(kTypeNames), any_comp(rng, depth - 1));
    default: {
      ArgList args;
      std::size_t n = rng.below(4);
      for (std::size_t i = 0; i < n; ++i) args.push_back(any_value(rng, depth - 1));
      ValueRef head = any_value(rng, depth - 1);
      if (r == 3) return let_ann(rng.pick(kTermNames), any_pos(rng, 2, false), head, args,
                                 any_comp(rng, depth - 1));
      return let_plain(rng.pick(kTermNames), head, args, any_comp(rng, depth - 1));
    }
  }
}

ValueRef any_value(Rng &rng, std::size_t depth) {
  std::size_t r = rng.below(depth == 0 ? 4 : 6);
  switch (r) {
    case 0: return var_value(rng.pick(kTermNames));
    case 1: {
      static const std::vector<std::int64_t> ints = {
          0, 1, -1, 42, -7, 9223372036854775807LL, -9223372036854775807LL - 1};
      return int_value(rng.pick(ints));
    }
    case 2: return bool_value(rng.chance(0.5));
    case 3: return var_value(rng.pick(kTermNames));
    case 4: return thunk_value(any_comp(rng, depth - 1));
    default: return pair_value(any_value(rng, depth - 1), any_value(rng, depth - 1));
  }
}

}  // namespace

CompRef random_term(Rng &rng, std::size_t depth) { return any_comp(rng, depth); }

Type random_any_type(Rng &rng) {
  bool evars = rng.chance(0.3);
  std::size_t depth = 1 + rng.below(5);
  return rng.chance(0.5) ? Type(any_pos(rng, depth, evars)) : Type(any_neg(rng, depth, evars));
}

bool term_equal(const ValueRef &a, const ValueRef &b) {
  if (a->node.index() != b->node.index()) return false;
  if (const auto *x = as<VarValue>(a)) return x->name == as<VarValue>(b)->name;
  if (const auto *x = as<ThunkValue>(a)) return term_equal(x->body, as<ThunkValue>(b)->body);
  if (const auto *x = as<IntValue>(a)) return x->value == as<IntValue>(b)->value;
  if (const auto *x = as<BoolValue>(a)) return x->value == as<BoolValue>(b)->value;
  const auto &x = std::get<PairValue>(a->node);
  const auto &y = std::get<PairValue>(b->node);
  return term_equal(x.first, y.first) && term_equal(x.second, y.second);
}

namespace {

bool args_equal(const ArgList &a, const ArgList &b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!term_equal(a[i], b[i])) return false;
  return true;
}

}  // namespace

bool term_equal(const CompRef &a, const CompRef &b) {
  if (a->node.index() != b->node.index()) return false;
  if (const auto *x = as<Lambda>(a)) {
    const auto *y = as<Lambda>(b);
    return x->param == y->param && alpha_equal(x->annotation, y->annotation) &&
           term_equal(x->body, y->body);
  }
  if (const auto *x = as<TypeAbs>(a)) {
    const auto *y = as<TypeAbs>(b);
    return x->binder == y->binder && term_equal(x->body, y->body);
  }
  if (const auto *x = as<Return>(a)) return term_equal(x->value, as<Return>(b)->value);
  if (const auto *x = as<LetAnn>(a)) {
    const auto *y = as<LetAnn>(b);
    return x->name == y->name && alpha_equal(x->annotation, y->annotation) &&
           term_equal(x->head, y->head) && args_equal(x->args, y->args) &&
           term_equal(x->cont, y->cont);
  }
  const auto &x = std::get<Let>(a->node);
  const auto &y = std::get<Let>(b->node);
  return x.name == y.name && term_equal(x.head, y.head) && args_equal(x.args, y.args) &&
         term_equal(x.cont, y.cont);
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

namespace {

AlgContext universals_context(const DeclContext &theta) {
  AlgContext out;
  for (const auto &u : theta) out.push(Universal{u});
  return out;
}

std::string judgment(const Type &a, const Type &b) { return pretty(a) + " <: " + pretty(b); }

void note(std::vector<std::string> &failures, std::string what) {
  if (failures.size() < 10) failures.push_back(std::move(what));
}

// Instance i of a stream depends only on (stream, i), so every suite that
// walks a stream sees the same instances.
enum Stream : std::uint64_t { kGroundStream = 0, kAlgStream = 1, kProgramStream = 2 };

Rng instance_rng(std::uint64_t seed, Stream stream, std::size_t i) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(stream), static_cast<std::uint64_t>(i)};
  std::array<std::uint32_t, 2> words;
  seq.generate(words.begin(), words.end());
  return Rng((static_cast<std::uint64_t>(words[0]) << 32) | words[1]);
}

enum class Verdict { Holds, Fails, Internal };

Verdict run_subtyper(Session &s, const AlgContext &theta, const Type &a, const Type &b,
                     AlgContext *out = nullptr, std::string *why = nullptr) {
  try {
    AlgContext r = subtype(s, theta, a, b);
    if (out) *out = r;
    return Verdict::Holds;
  } catch (const TypeError &) {
    return Verdict::Fails;
  } catch (const std::exception &e) {
    if (why) *why = e.what();
    return Verdict::Internal;
  }
}

}  // namespace

SubtypingReport run_subtyping_agreement(std::uint64_t seed, std::size_t ground,
                                        std::size_t algorithmic) {
  SubtypingReport rep;
  for (std::size_t i = 0; i < ground; ++i) {
    Rng rng = instance_rng(seed, kGroundStream, i);
    SubInstance inst = random_sub_instance(rng);
    rep.max_depth = std::max({rep.max_depth, type_depth(inst.left), type_depth(inst.right)});
    rep.max_quantifiers = std::max(
        {rep.max_quantifiers, quantifier_count(inst.left), quantifier_count(inst.right)});
    ++rep.ground;
    Session s;
    std::string why;
    Verdict alg = run_subtyper(s, universals_context(inst.theta), inst.left, inst.right,
                               nullptr, &why);
    if (alg == Verdict::Internal) {
      ++rep.internal_errors;
      note(rep.failures, "internal: " + why + " on " + judgment(inst.left, inst.right));
      continue;
    }
    bool decl = false;
    try {
      decl = oracle::decl_subtype(inst.theta, inst.left, inst.right);
    } catch (const oracle::BudgetExceeded &e) {
      ++rep.budget_exhausted;
      note(rep.failures, std::string(e.what()) + " on " + judgment(inst.left, inst.right));
      continue;
    }
    if (decl) ++rep.holding;
    if (decl != (alg == Verdict::Holds)) {
      ++rep.disagreements;
      note(rep.failures, "seed " + std::to_string(seed) + " #" + std::to_string(i) +
                             " (" + inst.strategy + "): algorithm " +
                             (alg == Verdict::Holds ? "accepts" : "rejects") + " " +
                             judgment(inst.left, inst.right));
    }
  }
  for (std::size_t i = 0; i < algorithmic; ++i) {
    Rng rng = instance_rng(seed, kAlgStream, i);
    AlgInstance inst = random_alg_instance(rng);
    ++rep.algorithmic;
    Session s;
    AlgContext out;
    std::string why;
    Verdict alg = run_subtyper(s, inst.theta, inst.left, inst.right, &out, &why);
    std::string shown = pretty(inst.theta) + " |- " + judgment(inst.left, inst.right);
    if (alg == Verdict::Internal) {
      ++rep.internal_errors;
      note(rep.failures, "internal: " + why + " on " + shown);
      continue;
    }
    bool decl = false;
    try {
      oracle::Oracle o;
      if (const auto *p = std::get_if<PosRef>(&inst.left))
        decl = o.exists_completion(inst.theta, *p, std::get<PosRef>(inst.right));
      else
        decl = o.exists_completion(inst.theta, std::get<NegRef>(inst.left),
                                   std::get<NegRef>(inst.right));
    } catch (const oracle::BudgetExceeded &e) {
      ++rep.budget_exhausted;
      note(rep.failures, std::string(e.what()) + " on " + shown);
      continue;
    }
    if (decl) ++rep.holding;
    if (decl != (alg == Verdict::Holds)) {
      ++rep.disagreements;
      note(rep.failures, "seed " + std::to_string(seed) + " alg #" + std::to_string(i) +
                             ": algorithm " +
                             (alg == Verdict::Holds ? "accepts" : "rejects") + " " + shown);
      continue;
    }
    if (alg == Verdict::Holds) {
      // The solutions found must themselves witness the judgment.
      Type a = apply_context(out, inst.left);
      Type b = apply_context(out, inst.right);
      bool sound = is_ground(a) && is_ground(b);
      try {
        sound = sound && oracle::decl_subtype(erase_context(out), a, b);
      } catch (const oracle::BudgetExceeded &) {
        ++rep.budget_exhausted;
        continue;
      }
      if (!sound) {
        ++rep.unsound_solutions;
        note(rep.failures, "unsound solution " + pretty(out) + " for " + shown);
      }
    }
  }
  return rep;
}

TypingReport run_typing_agreement(std::uint64_t seed, std::size_t programs) {
  TypingReport rep;
  TypeEnv env = prelude_env();
  for (std::size_t i = 0; i < programs; ++i) {
    Rng rng = instance_rng(seed, kProgramStream, i);
    CompRef t = random_program(rng);
    ++rep.programs;
    NegRef type;
    try {
      Session s;
      type = synth_computation(s, AlgContext(), env, t).type;
    } catch (const TypeError &) {
    } catch (const std::exception &e) {
      ++rep.internal_errors;
      note(rep.failures, std::string("internal: ") + e.what() + " on " + pretty(t));
      continue;
    }
    std::vector<NegRef> derivable;
    try {
      derivable = oracle::decl_synth({}, env, t);
    } catch (const oracle::BudgetExceeded &e) {
      ++rep.budget_exhausted;
      note(rep.failures, std::string(e.what()) + " on " + pretty(t));
      continue;
    }
    if (type) ++rep.accepted;
    if (static_cast<bool>(type) == derivable.empty()) {
      ++rep.disagreements;
      note(rep.failures, std::string("algorithm ") + (type ? "accepts" : "rejects") + " " +
                             pretty(t) + (type ? " : " + pretty(type) : ""));
      continue;
    }
    if (type && std::none_of(derivable.begin(), derivable.end(), [&](const NegRef &n) {
          return oracle::decl_iso({}, type, n);
        })) {
      ++rep.not_isomorphic;
      note(rep.failures, "no derivable type isomorphic to " + pretty(type) + " for " + pretty(t));
    }
  }
  return rep;
}

LemmaReport run_lemma_suite(std::uint64_t seed, std::size_t instances,
                            std::size_t programs) {
  LemmaReport rep;
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);  // choices made by the checks themselves
  CheckOptions verified{false, true};
  auto add_stats = [&](const Session &s) {
    rep.stats.metric_checks += s.stats().metric_checks;
    rep.stats.bound_checks += s.stats().bound_checks;
    rep.stats.postcondition_checks += s.stats().postcondition_checks;
  };
  auto violation = [&](std::string what) {
    ++rep.violations;
    note(rep.failures, std::move(what));
  };
  for (std::size_t i = 0; i < instances; ++i) {
    Rng instance = instance_rng(seed, kGroundStream, i);
    SubInstance inst = random_sub_instance(instance);
    AlgContext theta = universals_context(inst.theta);
    try {
      for (const Type *t : {&inst.left, &inst.right}) {
        ++rep.reflexivity;
        if (!oracle::decl_subtype(inst.theta, *t, *t))
          violation("declarative reflexivity fails on " + pretty(*t));
        Session s(verified);
        if (run_subtyper(s, theta, *t, *t) != Verdict::Holds)
          violation("algorithmic reflexivity fails on " + pretty(*t));
        add_stats(s);
      }

      Session s(verified);
      std::string why;
      if (run_subtyper(s, theta, inst.left, inst.right, nullptr, &why) == Verdict::Internal)
        violation(why + " on " + judgment(inst.left, inst.right));
      add_stats(s);

      bool ab = oracle::decl_subtype(inst.theta, inst.left, inst.right);
      std::string how;
      Type c = derive(rng, inst.theta, inst.right, how);
      if (ab && within_bounds(c) && oracle::decl_subtype(inst.theta, inst.right, c)) {
        ++rep.transitivity;
        if (!oracle::decl_subtype(inst.theta, inst.left, c))
          violation("transitivity fails through " + pretty(inst.right) + ": " +
                    judgment(inst.left, c));
      }

      if (ab && !inst.theta.empty()) {
        std::string alpha = rng.pick(inst.theta);
        DeclContext rest;
        for (const auto &u : inst.theta)
          if (u != alpha) rest.push_back(u);
        oracle::CandidateUniverse universe =
            oracle::candidate_universe({inst.left, inst.right}, rest);
        PosRef p = rng.pick(universe);
        Type a = subst(p, alpha, inst.left);
        Type b = subst(p, alpha, inst.right);
        ++rep.stability;
        if (!oracle::decl_subtype(rest, a, b))
          violation("[" + pretty(p) + "/" + alpha + "] breaks " +
                    judgment(inst.left, inst.right));
        Session s2(verified);
        if (run_subtyper(s2, universals_context(rest), a, b) != Verdict::Holds)
          violation("algorithmic stability fails for [" + pretty(p) + "/" + alpha + "] " +
                    judgment(inst.left, inst.right));
        add_stats(s2);
      }

      Rng alg_rng = instance_rng(seed, kAlgStream, i);
      AlgInstance alg = random_alg_instance(alg_rng);
      Session s3(verified);
      if (run_subtyper(s3, alg.theta, alg.left, alg.right, nullptr, &why) == Verdict::Internal)
        violation(why + " on " + pretty(alg.theta) + " |- " + judgment(alg.left, alg.right));
      add_stats(s3);
    } catch (const oracle::BudgetExceeded &e) {
      ++rep.budget_exhausted;
      note(rep.failures, e.what());
    }
  }
  TypeEnv env = prelude_env();
  for (std::size_t i = 0; i < programs; ++i) {
    Rng program_rng = instance_rng(seed, kProgramStream, i);
    CompRef t = random_program(program_rng);
    Session s(verified);
    try {
      synth_computation(s, AlgContext(), env, t);
    } catch (const TypeError &) {
    } catch (const std::exception &e) {
      violation(std::string(e.what()) + " on " + pretty(t));
    }
    add_stats(s);
  }
  return rep;
}

IsoEnvReport run_iso_env_suite() {
  IsoEnvReport rep;
  for (const auto &entry : corpus_entries()) {
    Program original = parse_program(entry.text, entry.name);
    Program swapped = original;
    std::vector<std::string> changed;
    for (auto &a : swapped.assumptions) {
      const auto *d = as<Down>(a.type);
      if (d == nullptr || num_prenex(d->body) < 2) continue;
      a.type = std::get<PosRef>(reverse_prenex(a.type));
      changed.push_back(a.name);
    }
    // Only programs that use a reordered binding say anything.
    std::string body = pretty(original.body);
    bool uses = false;
    for (const auto &name : changed) {
      std::size_t n = 0;
      for (std::size_t at = body.find(name); at != std::string::npos;
           at = body.find(name, at + 1)) {
        bool left = at == 0 || !std::isalnum(static_cast<unsigned char>(body[at - 1]));
        std::size_t end = at + name.size();
        bool right = end == body.size() ||
                     !(std::isalnum(static_cast<unsigned char>(body[end])) ||
                       body[end] == '\'' || body[end] == '_');
        n += left && right;
      }
      uses = uses || n > 0;
    }
    if (!uses) continue;
    ++rep.programs;
    CheckOutcome a = check_program(original, entry.text);
    CheckOutcome b = check_program(swapped, entry.text);
    bool same = a.status == b.status;
    if (same && a.status == Status::Accepted)
      same = isomorphic(AlgContext(), a.type, b.type) && oracle::decl_iso({}, a.type, b.type);
    if (!same) ++rep.violations;
    rep.details.push_back(entry.row + ": " +
                          (a.status == Status::Accepted ? pretty(a.type)
                                                        : std::string(to_string(a.status))) +
                          (same ? " ~ " : " vs ") +
                          (b.status == Status::Accepted ? pretty(b.type)
                                                        : std::string(to_string(b.status))));
  }
  return rep;
}

DeterminismReport run_determinism(std::uint64_t seed, std::size_t fuzz_inputs) {
  DeterminismReport rep;
  CheckOptions traced{true, false};
  auto twice = [&](const std::string &text, const std::string &name) {
    ++rep.inputs;
    std::string first = render_json(check_source(text, name, traced));
    std::string second = render_json(check_source(text, name, traced));
    if (first != second) {
      ++rep.mismatches;
      note(rep.failures, name);
    }
  };
  for (const auto &e : corpus_entries()) twice(e.text, e.name + ".ipf");
  for (std::size_t i = 0; i < fuzz_inputs; ++i) {
    Rng rng = instance_rng(seed, kProgramStream, i);
    Program p = prelude();
    p.body = random_program(rng);
    twice(pretty(p), "fuzz" + std::to_string(i) + ".ipf");
  }
  return rep;
}

RoundTripReport run_round_trip(std::uint64_t seed, std::size_t asts) {
  RoundTripReport rep;
  Rng rng(seed);
  const Signature &sig = test_signature();
  for (std::size_t i = 0; i < asts; ++i) {
    ++rep.asts;
    std::string text;
    bool ok = false;
    try {
      if (i % 2 == 0) {
        Type t = random_any_type(rng);
        text = pretty(t);
        ok = alpha_equal(t, parse_type(text, polarity_of(t), sig, true));
      } else {
        CompRef t = random_term(rng, 1 + rng.below(4));
        text = pretty(t);
        ok = term_equal(t, parse_computation(text, sig));
      }
    } catch (const TypeError &e) {
      text += "  (" + e.message() + ")";
    }
    if (!ok) {
      ++rep.failures;
      note(rep.examples, text);
    }
  }
  return rep;
}

}  // namespace polarf::testkit
