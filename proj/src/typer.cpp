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


#include "polarf/typer.hpp"

#include <numeric>

#include "polarf/pretty.hpp"
#include "polarf/subtyper.hpp"
#include "polarf/types.hpp"
#include "polarf/wellformed.hpp"

namespace polarf {

namespace {

std::string clip(std::string s) {
  constexpr std::size_t kMax = 72;
  if (s.size() > kMax) s = s.substr(0, kMax - 3) + "...";
  return s;
}

std::size_t suffix_size(const ArgList &args, std::size_t from) {
  std::size_t n = 0;
  for (std::size_t i = from; i < args.size(); ++i) n += term_size(args[i]);
  return n;
}

// Re-raises a subtype failure from a nested judgment with context from the
// enclosing term.
[[noreturn]] void rethrow_with(const TypeError &e, const std::string &prefix,
                               const SourceSpan &span) {
  TypeError out(e.kind(), prefix + ": " + e.message(), span);
  throw out;
}

class Typer {
 public:
  explicit Typer(Session &s) : s_(s) {}

  ValueResult value(const AlgContext &theta, const TypeEnv &env, const ValueRef &v,
                    const Metric *parent) {
    const Metric m{term_size(v), 0};
    check_descent(s_, parent, m, "value synthesis");
    try {
      ValueResult r = value_rules(theta, env, v, m);
      after(theta, r);
      return r;
    } catch (TypeError &e) {
      if (e.span().empty()) e.set_span(v->span);
      throw;
    }
  }

  CompResult comp(const AlgContext &theta, const TypeEnv &env, const CompRef &t,
                  const Metric *parent) {
    const Metric m{term_size(t), 0};
    check_descent(s_, parent, m, "computation synthesis");
    try {
      CompResult r = comp_rules(theta, env, t, m);
      after(theta, r);
      return r;
    } catch (TypeError &e) {
      if (e.span().empty()) e.set_span(t->span);
      throw;
    }
  }

  SpineResult spine(const AlgContext &theta, const TypeEnv &env, const ArgList &args,
                    std::size_t from, const NegRef &head, const Metric *parent,
                    const Metric &term_parent) {
    const Metric m{suffix_size(args, from), num_prenex(head)};
    check_descent(s_, parent, m, "spine synthesis");
    SpineResult r = spine_rules(theta, env, args, from, head, m, term_parent);
    if (s_.verifying()) spine_post(theta, head, r);
    return r;
  }

 private:
  template <typename T>
  void after(const AlgContext &theta, const Synthesized<T> &r) {
    if (!s_.verifying()) return;
    ++s_.stats().postcondition_checks;
    if (!is_ground(r.type))
      throw InvariantViolation("synthesized type " + pretty(r.type) + " is not ground");
    if (auto why = wf_context_problem(r.context); !why.empty())
      throw InvariantViolation("typing produced an ill-formed context: " + why);
    if (auto why = wf_type_problem(r.context, r.type); !why.empty())
      throw InvariantViolation("synthesized type is ill-formed: " + why);
    if (!extends(theta, r.context))
      throw InvariantViolation("typing output does not extend its input");
  }

  void spine_post(const AlgContext &theta, const NegRef &head, const SpineResult &r) {
    ++s_.stats().postcondition_checks;
    if (auto why = wf_context_problem(r.context); !why.empty())
      throw InvariantViolation("spine produced an ill-formed context: " + why);
    if (!weak_extends(theta, r.context))
      throw InvariantViolation("spine output does not weakly extend its input");
    if (!alpha_equal(apply_context(r.context, r.type), r.type))
      throw InvariantViolation("spine result mentions solved existentials");
    NameSet allowed = free_evars(head);
    NameSet before = theta.existentials();
    for (const auto &e : r.context.existentials())
      if (before.count(e) == 0) allowed.insert(e);
    for (const auto &e : free_evars(r.type))
      if (allowed.count(e) == 0)
        throw InvariantViolation("spine result mentions foreign existential ^" + e);
  }

  void check_annotation(const AlgContext &theta, const PosRef &p, const SourceSpan &span) {
    if (auto why = wf_type_problem(theta, p); !why.empty())
      throw TypeError(ErrorKind::IllFormed, "ill-formed annotation " + pretty(p) + ": " + why,
                      span);
  }

  ValueResult value_rules(const AlgContext &theta, const TypeEnv &env,
                          const ValueRef &v, const Metric &m) {
    auto goal = [&] { return clip(pretty(v)) + " =>"; };
    if (const auto *x = as<VarValue>(v)) {
      TraceScope t(s_, "Avar", goal, theta);
      const PosRef *type = env.lookup(x->name);
      if (type == nullptr)
        throw TypeError(ErrorKind::UnboundVariable, "unbound variable " + x->name, v->span);
      t.done_with([&] { return pretty(*type) + " -| " + TraceScope::render(theta); });
      return {*type, theta};
    }
    if (const auto *x = as<ThunkValue>(v)) {
      TraceScope t(s_, "Athunk", goal, theta);
      CompResult body = comp(theta, env, x->body, &m);
      ValueResult r{down(body.type), body.context};
      t.done_with([&] { return pretty(r.type) + " -| " + TraceScope::render(r.context); });
      return r;
    }
    if (as<IntValue>(v) || as<BoolValue>(v)) {
      bool is_int = as<IntValue>(v) != nullptr;
      TraceScope t(s_, is_int ? "Aint" : "Abool", goal, theta);
      ValueResult r{data(is_int ? kIntCtor : kBoolCtor), theta};
      t.done_with([&] { return pretty(r.type) + " -| " + TraceScope::render(theta); });
      return r;
    }
    const auto &p = std::get<PairValue>(v->node);
    TraceScope t(s_, "Apair", goal, theta);
    ValueResult first = value(theta, env, p.first, &m);
    ValueResult second = value(first.context, env, p.second, &m);
    ValueResult r{product(first.type, second.type), second.context};
    t.done_with([&] { return pretty(r.type) + " -| " + TraceScope::render(r.context); });
    return r;
  }

  CompResult comp_rules(const AlgContext &theta, const TypeEnv &env,
                        const CompRef &c, const Metric &m) {
    auto goal = [&] { return clip(pretty(c)) + " =>"; };
    auto out = [](const CompResult &r) {
      return [&r] { return pretty(r.type) + " -| " + TraceScope::render(r.context); };
    };
    if (const auto *x = as<Lambda>(c)) {
      TraceScope t(s_, "Afunabs", goal, theta);
      check_annotation(theta, x->annotation, c->span);
      CompResult body = comp(theta, env.extended(x->param, x->annotation), x->body, &m);
      CompResult r{arrow(x->annotation, body.type), body.context};
      t.done_with(out(r));
      return r;
    }
    if (const auto *x = as<TypeAbs>(c)) {
      TraceScope t(s_, "Atypeabs", goal, theta);
      std::string alpha = x->binder;
      CompRef body = x->body;
      if (theta.has_universal(alpha)) {
        NameSet avoid;
        for (const auto &u : theta.universals()) avoid.insert(u);
        alpha = fresh_variant(alpha, avoid);
        body = rename_type_var(body, x->binder, alpha);
      }
      AlgContext inner = theta;
      inner.push(Universal{alpha});
      CompResult b = comp(inner, env, body, &m);
      if (b.context.empty() || !std::holds_alternative<Universal>(b.context.back()) ||
          entry_name(b.context.back()) != alpha)
        throw InvariantViolation("Atypeabs output does not end with its universal");
      b.context.pop();
      CompResult r{forall(alpha, b.type), b.context};
      t.done_with(out(r));
      return r;
    }
    if (const auto *x = as<Return>(c)) {
      TraceScope t(s_, "Areturn", goal, theta);
      ValueResult v = value(theta, env, x->value, &m);
      CompResult r{up(v.type), v.context};
      t.done_with(out(r));
      return r;
    }
    if (const auto *x = as<LetAnn>(c)) {
      TraceScope t(s_, "Aambiguouslet", goal, theta);
      check_annotation(theta, x->annotation, c->span);
      auto [q, after_spine] = application(theta, env, x->head, x->args, c, m);
      AlgContext third, fourth;
      try {
        third = subtype_pos(s_, after_spine, x->annotation, q);
        fourth = subtype_pos(s_, third, apply_context(third, q), x->annotation);
      } catch (const TypeError &e) {
        rethrow_with(e,
                     "annotation " + pretty(x->annotation) + " of " + x->name +
                         " does not match the application's type " +
                         pretty(apply_context(after_spine, q)),
                     c->span);
      }
      AlgContext fifth = restrict_context(fourth, theta);
      CompResult r = comp(fifth, env.extended(x->name, x->annotation), x->cont, &m);
      t.done_with(out(r));
      return r;
    }
    const auto &x = std::get<Let>(c->node);
    TraceScope t(s_, "Aunambiguouslet", goal, theta);
    auto [q, after_spine] = application(theta, env, x.head, x.args, c, m);
    if (NameSet fev = free_evars(q); !fev.empty())
      throw TypeError(ErrorKind::AmbiguousLet,
                      "the type of " + x.name + " is ambiguous: the application " +
                          clip(pretty(x.head) + pretty(x.args)) + " returns up " +
                          pretty(q) + " with unsolved existentials; annotate it as " +
                          "let " + x.name + " : P = ...",
                      c->span);
    AlgContext third = restrict_context(after_spine, theta);
    CompResult r = comp(third, env.extended(x.name, q), x.cont, &m);
    t.done_with(out(r));
    return r;
  }

  // Shared first two premises of both let rules: a thunk head and a spine
  // that returns an up-shifted type. Returns Q and the spine's output.
  std::pair<PosRef, AlgContext> application(const AlgContext &theta, const TypeEnv &env,
                                            const ValueRef &head, const ArgList &args,
                                            const CompRef &let, const Metric &m) {
    ValueResult h = value(theta, env, head, &m);
    const auto *d = as<Down>(h.type);
    if (d == nullptr)
      throw TypeError(ErrorKind::Shape,
                      "the head " + clip(pretty(head)) + " has type " + pretty(h.type) +
                          ", which is not a thunk (dn N)",
                      head->span);
    SpineResult sp = spine(h.context, env, args, 0, d->body, nullptr, m);
    const auto *u = as<Up>(sp.type);
    if (u == nullptr)
      throw TypeError(ErrorKind::Shape,
                      "partial application is forbidden: " +
                          clip(pretty(head) + pretty(args)) + " has type " +
                          pretty(sp.type) + ", which is not of the form up P",
                      let->span);
    return {u->body, sp.context};
  }

  SpineResult spine_rules(const AlgContext &theta, const TypeEnv &env,
                          const ArgList &args, std::size_t from, const NegRef &head,
                          const Metric &m, const Metric &term_parent) {
    auto goal = [&] {
      ArgList rest(args.begin() + static_cast<long>(from), args.end());
      return clip(pretty(rest)) + " : " + clip(pretty(head)) + " >>";
    };
    auto out = [](const SpineResult &r) {
      return [&r] { return pretty(r.type) + " -| " + TraceScope::render(r.context); };
    };
    if (const auto *f = as<Forall>(head)) {
      if (free_uvars(f->body).count(f->binder) == 0) {
        TraceScope t(s_, "Aspinetypeabsnotin", goal, theta);
        SpineResult r = spine(theta, env, args, from, f->body, &m, term_parent);
        t.done_with(out(r));
        return r;
      }
      TraceScope t(s_, "Aspinetypeabsin", goal, theta);
      std::string hat = s_.fresh_existential(f->binder, theta);
      AlgContext inner = theta;
      inner.push(Unsolved{hat});
      SpineResult r = spine(inner, env, args, from,
                            subst_type(evar(hat), f->binder, f->body), &m, term_parent);
      t.done_with(out(r));
      return r;
    }
    if (from == args.size()) {
      TraceScope t(s_, "Aspinenil", goal, theta);
      SpineResult r{head, theta};
      t.done_with(out(r));
      return r;
    }
    const ValueRef &v = args[from];
    const auto *a = as<Arrow>(head);
    if (a == nullptr)
      throw TypeError(ErrorKind::Arity,
                      "too many arguments: " + clip(pretty(v)) +
                          " is passed to a head of type " + pretty(head) +
                          ", which takes no further arguments",
                      v->span);
    TraceScope t(s_, "Aspinecons", goal, theta);
    ValueResult arg = value(theta, env, v, &term_parent);
    PosRef expected = apply_context(arg.context, a->domain);
    AlgContext matched;
    try {
      matched = subtype_pos(s_, arg.context, arg.type, expected);
    } catch (const TypeError &e) {
      rethrow_with(e,
                   "argument " + clip(pretty(v)) + " has type " + pretty(arg.type) +
                       ", expected " + pretty(expected),
                   v->span);
    }
    SpineResult r = spine(matched, env, args, from + 1,
                          apply_context(matched, a->codomain), &m, term_parent);
    t.done_with(out(r));
    return r;
  }

  Session &s_;
};

}  // namespace

ValueResult synth_value(Session &s, const AlgContext &theta, const TypeEnv &env,
                        const ValueRef &v) {
  return Typer(s).value(theta, env, v, nullptr);
}

CompResult synth_computation(Session &s, const AlgContext &theta,
                             const TypeEnv &env, const CompRef &t) {
  return Typer(s).comp(theta, env, t, nullptr);
}

SpineResult synth_spine(Session &s, const AlgContext &theta, const TypeEnv &env,
                        const ArgList &args, const NegRef &head) {
  Metric root{suffix_size(args, 0) + 1, 0};
  return Typer(s).spine(theta, env, args, 0, head, nullptr, root);
}

}  // namespace polarf
