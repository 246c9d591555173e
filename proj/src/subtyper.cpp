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


#include "polarf/subtyper.hpp"

#include "polarf/pretty.hpp"
#include "polarf/types.hpp"
#include "polarf/wellformed.hpp"

namespace polarf {

namespace {

Metric pos_metric(const PosRef &p, const PosRef &q) {
  return {termsize(p), num_prenex(p) + num_prenex(q)};
}
Metric neg_metric(const NegRef &n, const NegRef &m) {
  return {termsize(m), num_prenex(n) + num_prenex(m)};
}

[[noreturn]] void fail(const Type &a, const Type &b, const std::string &why = {}) {
  std::string msg = pretty(a) + " is not a subtype of " + pretty(b);
  if (!why.empty()) msg += " (" + why + ")";
  throw TypeError(ErrorKind::SubtypeFailure, msg);
}

class Subtyper {
 public:
  explicit Subtyper(Session &s) : s_(s) {}

  AlgContext pos(const AlgContext &theta, const PosRef &p, const PosRef &q,
                 const Metric *parent) {
    const Metric m = pos_metric(p, q);
    check_descent(s_, parent, m, "positive subtyping");
    AlgContext out = pos_rules(theta, p, q, m);
    after(theta, out, p, apply_context(out, q));
    return out;
  }

  AlgContext neg(const AlgContext &theta, const NegRef &n, const NegRef &mm,
                 const Metric *parent) {
    const Metric m = neg_metric(n, mm);
    check_descent(s_, parent, m, "negative subtyping");
    AlgContext out = neg_rules(theta, n, mm, m);
    after(theta, out, mm, apply_context(out, n));
    return out;
  }

 private:
  // Postconditions shared by both polarities; `ground` is the ground side
  // and `completed` the other side after applying the output context.
  template <typename T>
  void after(const AlgContext &theta, const AlgContext &out, const T &ground,
             const T &completed) {
    ++s_.stats().bound_checks;
    if (!same_shape(theta, out))
      throw InvariantViolation("subtyping changed the shape of its context");
    if (termsize(completed) > termsize(ground))
      throw InvariantViolation("completed side " + pretty(completed) +
                               " is larger than ground side " + pretty(ground));
    if (!s_.verifying()) return;
    ++s_.stats().postcondition_checks;
    if (!is_ground(completed))
      throw InvariantViolation("subtyping left " + pretty(completed) + " unsolved");
    if (auto why = wf_context_problem(out); !why.empty())
      throw InvariantViolation("subtyping produced an ill-formed context: " + why);
    if (!extends(theta, out))
      throw InvariantViolation("subtyping output does not extend its input");
  }

  AlgContext pos_rules(const AlgContext &theta, const PosRef &p, const PosRef &q,
                       const Metric &m) {
    if (const auto *x = as<EVar>(q)) {
      TraceScope t(s_, "ainst", [&] { return pretty(p) + " <: " + pretty(q); }, theta);
      auto index = theta.find_existential(x->name);
      if (!index) throw InvariantViolation("existential ^" + x->name + " not in context");
      if (!std::holds_alternative<Unsolved>(theta.entries()[*index]))
        throw InvariantViolation("existential ^" + x->name + " already solved");
      AlgContext prefix(std::vector<ContextEntry>(
          theta.entries().begin(), theta.entries().begin() + static_cast<long>(*index)));
      if (!is_ground(p)) throw InvariantViolation("ainst solution not ground");
      if (auto why = wf_type_problem(prefix, p); !why.empty())
        fail(p, q, "solution would escape its scope: " + why);
      std::vector<ContextEntry> entries = theta.entries();
      entries[*index] = Solved{x->name, p};
      AlgContext out(std::move(entries));
      t.done(out);
      return out;
    }
    if (const auto *a = as<UVar>(p)) {
      const auto *b = as<UVar>(q);
      if (b == nullptr || a->name != b->name) fail(p, q);
      TraceScope t(s_, "arefl", [&] { return pretty(p) + " <: " + pretty(q); }, theta);
      if (!theta.has_universal(a->name))
        throw InvariantViolation("type variable " + a->name + " not in context");
      t.done(theta);
      return theta;
    }
    if (const auto *a = as<Down>(p)) {
      const auto *b = as<Down>(q);
      if (b == nullptr) fail(p, q);
      TraceScope t(s_, "ashiftdown", [&] { return pretty(p) + " <: " + pretty(q); }, theta);
      AlgContext mid = neg(theta, b->body, a->body, &m);
      AlgContext out = neg(mid, a->body, apply_context(mid, b->body), &m);
      t.done(out);
      return out;
    }
    if (const auto *a = as<Data>(p)) {
      const auto *b = as<Data>(q);
      if (b == nullptr || a->ctor != b->ctor || a->args.size() != b->args.size())
        fail(p, q);
      TraceScope t(s_, "adata", [&] { return pretty(p) + " <: " + pretty(q); }, theta);
      AlgContext out = args(theta, a->args, b->args, m);
      t.done(out);
      return out;
    }
    throw InvariantViolation("positive subtyping on a non-ground left side " + pretty(p));
  }

  // Invariant constructor arguments: ground[i] <: other[i] then back.
  AlgContext args(const AlgContext &theta, const std::vector<PosRef> &ground,
                  const std::vector<PosRef> &other, const Metric &m) {
    AlgContext cur = theta;
    for (std::size_t i = 0; i < ground.size(); ++i) {
      cur = pos(cur, ground[i], apply_context(cur, other[i]), &m);
      cur = pos(cur, apply_context(cur, other[i]), ground[i], &m);
    }
    return cur;
  }

  AlgContext neg_rules(const AlgContext &theta, const NegRef &n, const NegRef &mm,
                       const Metric &m) {
    auto goal = [&] { return pretty(n) + " <: " + pretty(mm); };
    if (const auto *b = as<Forall>(mm)) {
      TraceScope t(s_, "aforallr", goal, theta);
      std::string beta = b->binder;
      NegRef body = b->body;
      if (theta.has_universal(beta)) {
        NameSet avoid;
        for (const auto &u : theta.universals()) avoid.insert(u);
        beta = fresh_variant(beta, avoid);
        body = subst_type(uvar(beta), b->binder, body);
      }
      AlgContext inner = theta;
      inner.push(Universal{beta});
      AlgContext out = neg(inner, n, body, &m);
      if (out.empty() || !std::holds_alternative<Universal>(out.back()) ||
          entry_name(out.back()) != beta)
        throw InvariantViolation("aforallr output does not end with its universal");
      out.pop();
      t.done(out);
      return out;
    }
    if (const auto *a = as<Forall>(n)) {
      TraceScope t(s_, "aforalll", goal, theta);
      std::string hat = s_.fresh_existential(a->binder, theta);
      AlgContext inner = theta;
      inner.push(Unsolved{hat});
      AlgContext out = neg(inner, subst_type(evar(hat), a->binder, a->body), mm, &m);
      if (out.empty() || !is_existential(out.back()) || entry_name(out.back()) != hat)
        throw InvariantViolation("aforalll output does not end with its existential");
      out.pop();
      t.done(out);
      return out;
    }
    if (const auto *a = as<Arrow>(n)) {
      const auto *b = as<Arrow>(mm);
      if (b == nullptr) fail(n, mm);
      TraceScope t(s_, "aarrow", goal, theta);
      AlgContext mid = pos(theta, b->domain, a->domain, &m);
      AlgContext out = neg(mid, apply_context(mid, a->codomain), b->codomain, &m);
      t.done(out);
      return out;
    }
    if (const auto *a = as<Up>(n)) {
      const auto *b = as<Up>(mm);
      if (b == nullptr) fail(n, mm);
      TraceScope t(s_, "ashiftup", goal, theta);
      AlgContext mid = pos(theta, b->body, a->body, &m);
      AlgContext out = pos(mid, apply_context(mid, a->body), b->body, &m);
      t.done(out);
      return out;
    }
    const auto &a = std::get<NegData>(n->node);
    const auto *b = as<NegData>(mm);
    if (b == nullptr || a.ctor != b->ctor || a.args.size() != b->args.size())
      fail(n, mm);
    TraceScope t(s_, "anegdata", goal, theta);
    AlgContext out = args(theta, b->args, a.args, m);
    t.done(out);
    return out;
  }

  Session &s_;
};

}  // namespace

AlgContext subtype_pos(Session &s, const AlgContext &theta, const PosRef &p,
                       const PosRef &q) {
  return Subtyper(s).pos(theta, p, q, nullptr);
}

AlgContext subtype_neg(Session &s, const AlgContext &theta, const NegRef &n,
                       const NegRef &m) {
  return Subtyper(s).neg(theta, n, m, nullptr);
}

AlgContext subtype(Session &s, const AlgContext &theta, const Type &a,
                   const Type &b) {
  if (a.index() != b.index()) fail(a, b, "the types have different polarities");
  if (const auto *p = std::get_if<PosRef>(&a))
    return subtype_pos(s, theta, *p, std::get<PosRef>(b));
  return subtype_neg(s, theta, std::get<NegRef>(a), std::get<NegRef>(b));
}

bool isomorphic(Session &s, const AlgContext &theta, const Type &a,
                const Type &b) {
  try {
    subtype(s, theta, a, b);
    subtype(s, theta, b, a);
    return true;
  } catch (const TypeError &) {
    return false;
  }
}

bool isomorphic(const AlgContext &theta, const Type &a, const Type &b) {
  Session s;
  return isomorphic(s, theta, a, b);
}

}  // namespace polarf
