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

#include "polarf/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

#include "polarf/error.hpp"
#include "polarf/types.hpp"

namespace polarf::oracle {

namespace {

// Declarative subtyping metric: size of the bounding side, then the total
// prenex count. Every recursive call must strictly decrease it.
using Metric = std::pair<std::size_t, std::size_t>;

Metric pos_metric(const PosRef &p) { return {termsize(p), 0}; }
Metric neg_metric(const NegRef &n, const NegRef &m) {
  return {termsize(m), num_prenex(n) + num_prenex(m)};
}

void descend(const Metric &parent, const Metric &child, const char *rule) {
  if (!(child < parent))
    throw InvariantViolation(std::string("declarative metric did not decrease in ") +
                             rule);
}

NameSet name_set(const DeclContext &theta) {
  return NameSet(theta.begin(), theta.end());
}

bool closed_in(const Type &t, const NameSet &scope) {
  if (!is_ground(t)) return false;
  for (const auto &u : free_uvars(t))
    if (scope.count(u) == 0) return false;
  return true;
}

template <typename T>
std::vector<T> dedupe(std::vector<T> xs) {
  std::set<std::string> seen;
  std::vector<T> out;
  for (auto &x : xs)
    if (seen.insert(canonical_key(x)).second) out.push_back(std::move(x));
  return out;
}

std::string context_key(const DeclContext &theta) {
  std::string out;
  for (const auto &a : theta) {
    out += a;
    out += ',';
  }
  return out;
}

// Binder name for a quantifier entering theta, renamed when it clashes.
std::string enter_binder(const DeclContext &theta, const std::string &binder) {
  NameSet scope = name_set(theta);
  return scope.count(binder) ? fresh_variant(binder, scope) : binder;
}

bool enumerate(const std::vector<std::string> &evars,
               const std::vector<CandidateUniverse> &choices, std::size_t i,
               EvarSolutions &sols,
               const std::function<bool(const EvarSolutions &)> &leaf) {
  if (i == evars.size()) return leaf(sols);
  for (const auto &c : choices[i]) {
    sols[evars[i]] = c;
    if (enumerate(evars, choices, i + 1, sols, leaf)) return true;
  }
  sols.erase(evars[i]);
  return false;
}

}  // namespace

CandidateUniverse candidate_universe(const std::vector<Type> &sources,
                                     const DeclContext &theta) {
  NameSet scope = name_set(theta);
  std::set<std::string> seen;
  CandidateUniverse out;
  auto add = [&](const PosRef &p) {
    if (closed_in(p, scope) && seen.insert(canonical_key(p)).second)
      out.push_back(p);
  };
  add(data(kIntCtor));
  add(data(kBoolCtor));
  for (const auto &a : theta) add(uvar(a));
  for (const auto &t : sources)
    for (const auto &p : positive_subterms(t)) add(p);
  return out;
}

Oracle::Oracle(Budget budget, CandidateUniverse extra)
    : budget_(budget), extra_(std::move(extra)) {}

void Oracle::note_elims(std::size_t elims) {
  if (elims > budget_.max_eliminations)
    throw BudgetExceeded("more than " +
                         std::to_string(budget_.max_eliminations) +
                         " quantifier eliminations on one branch");
  max_seen_ = std::max(max_seen_, elims);
}

CandidateUniverse Oracle::candidates(const DeclContext &theta,
                                     const std::vector<Type> &goal_types) const {
  std::vector<Type> sources = goal_types;
  for (const auto &p : extra_) sources.emplace_back(p);
  CandidateUniverse out = candidate_universe(sources, theta);
  if (out.size() > budget_.max_universe)
    throw BudgetExceeded("candidate universe has " + std::to_string(out.size()) +
                         " members, limit " +
                         std::to_string(budget_.max_universe));
  return out;
}

// ---------------------------------------------------------------------------
// Subtyping
// ---------------------------------------------------------------------------

bool Oracle::mutual(const DeclContext &theta, const std::vector<PosRef> &xs,
                    const std::vector<PosRef> &ys, std::size_t elims) {
  if (xs.size() != ys.size()) return false;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!pos_sub(theta, xs[i], ys[i], elims)) return false;
    if (termsize(ys[i]) > termsize(xs[i]))
      throw InvariantViolation("declarative size bound fails on constructor argument");
    if (!pos_sub(theta, ys[i], xs[i], elims)) return false;
  }
  return true;
}

bool Oracle::pos_sub(const DeclContext &theta, const PosRef &p, const PosRef &q,
                     std::size_t elims) {
  const Metric m0 = pos_metric(p);
  if (const auto *a = as<UVar>(p)) {
    const auto *b = as<UVar>(q);
    return b != nullptr && a->name == b->name &&
           std::find(theta.begin(), theta.end(), a->name) != theta.end();
  }
  if (const auto *a = as<Down>(p)) {
    const auto *b = as<Down>(q);
    if (b == nullptr) return false;
    descend(m0, neg_metric(b->body, a->body), "dshiftdown");
    if (!neg_sub(theta, b->body, a->body, elims)) return false;
    descend(m0, neg_metric(a->body, b->body), "dshiftdown");
    return neg_sub(theta, a->body, b->body, elims);
  }
  if (const auto *a = as<Data>(p)) {
    const auto *b = as<Data>(q);
    if (b == nullptr || a->ctor != b->ctor) return false;
    for (const auto &x : a->args) descend(m0, pos_metric(x), "data");
    return mutual(theta, a->args, b->args, elims);
  }
  return false;  // existentials have no declarative rule
}

bool Oracle::neg_sub(const DeclContext &theta, const NegRef &n, const NegRef &m,
                     std::size_t elims) {
  const std::string key =
      context_key(theta) + "|" + canonical_key(n) + "<=" + canonical_key(m);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  bool result = neg_sub_uncached(theta, n, m, elims);
  memo_.emplace(key, result);
  return result;
}

bool Oracle::neg_sub_uncached(const DeclContext &theta, const NegRef &n,
                              const NegRef &m, std::size_t elims) {
  const Metric m0 = neg_metric(n, m);
  if (const auto *b = as<Forall>(m)) {
    std::string beta = enter_binder(theta, b->binder);
    NegRef body = beta == b->binder ? b->body : subst_type(uvar(beta), b->binder, b->body);
    DeclContext inner = theta;
    inner.push_back(beta);
    descend(m0, neg_metric(n, body), "dforallr");
    if (neg_sub(inner, n, body, elims)) return true;
    // dforallr is invertible, so the left rule below can only repeat the
    // failure; it is still explored so the search does not rely on that.
  }
  if (const auto *a = as<Forall>(n)) {
    note_elims(elims + 1);
    for (const auto &p : candidates(theta, {n, m})) {
      NegRef inst = subst_type(p, a->binder, a->body);
      descend(m0, neg_metric(inst, m), "dforalll");
      if (neg_sub(theta, inst, m, elims + 1)) return true;
    }
    return false;
  }
  if (as<Forall>(m)) return false;
  if (const auto *a = as<Arrow>(n)) {
    const auto *b = as<Arrow>(m);
    if (b == nullptr) return false;
    descend(m0, pos_metric(b->domain), "darrow");
    if (!pos_sub(theta, b->domain, a->domain, elims)) return false;
    descend(m0, neg_metric(a->codomain, b->codomain), "darrow");
    return neg_sub(theta, a->codomain, b->codomain, elims);
  }
  if (const auto *a = as<Up>(n)) {
    const auto *b = as<Up>(m);
    if (b == nullptr) return false;
    descend(m0, pos_metric(b->body), "dshiftup");
    if (!pos_sub(theta, b->body, a->body, elims)) return false;
    if (termsize(a->body) > termsize(b->body))
      throw InvariantViolation("declarative size bound fails in dshiftup");
    return pos_sub(theta, a->body, b->body, elims);
  }
  if (const auto *a = as<NegData>(n)) {
    const auto *b = as<NegData>(m);
    if (b == nullptr || a->ctor != b->ctor) return false;
    for (const auto &x : b->args) descend(m0, pos_metric(x), "negdata");
    return mutual(theta, b->args, a->args, elims);
  }
  return false;
}

bool Oracle::subtype(const DeclContext &theta, const Type &a, const Type &b) {
  if (a.index() != b.index()) return false;
  if (const auto *p = std::get_if<PosRef>(&a))
    return pos_sub(theta, *p, std::get<PosRef>(b), 0);
  return neg_sub(theta, std::get<NegRef>(a), std::get<NegRef>(b), 0);
}

bool Oracle::iso(const DeclContext &theta, const Type &a, const Type &b) {
  return subtype(theta, a, b) && subtype(theta, b, a);
}

// ---------------------------------------------------------------------------
// Typing
// ---------------------------------------------------------------------------

std::vector<PosRef> Oracle::value_at(const DeclContext &theta,
                                     const TypeEnv &env, const ValueRef &v) {
  std::vector<PosRef> out;
  if (const auto *x = as<VarValue>(v)) {
    if (const PosRef *t = env.lookup(x->name)) out.push_back(*t);
  } else if (const auto *x = as<ThunkValue>(v)) {
    for (const auto &n : synth_at(theta, env, x->body)) out.push_back(down(n));
  } else if (as<IntValue>(v)) {
    out.push_back(data(kIntCtor));
  } else if (as<BoolValue>(v)) {
    out.push_back(data(kBoolCtor));
  } else if (const auto *x = as<PairValue>(v)) {
    auto firsts = value_at(theta, env, x->first);
    auto seconds = value_at(theta, env, x->second);
    for (const auto &p : firsts)
      for (const auto &q : seconds) out.push_back(product(p, q));
  }
  return dedupe(std::move(out));
}

std::vector<NegRef> Oracle::synth_at(const DeclContext &theta,
                                     const TypeEnv &env, const CompRef &t) {
  NameSet scope = name_set(theta);
  std::vector<NegRef> out;
  if (const auto *x = as<Lambda>(t)) {
    if (!closed_in(x->annotation, scope)) return {};
    for (const auto &n : synth_at(theta, env.extended(x->param, x->annotation), x->body))
      out.push_back(arrow(x->annotation, n));
  } else if (const auto *x = as<TypeAbs>(t)) {
    std::string alpha = enter_binder(theta, x->binder);
    CompRef body = alpha == x->binder ? x->body
                                      : rename_type_var(x->body, x->binder, alpha);
    DeclContext inner = theta;
    inner.push_back(alpha);
    for (const auto &n : synth_at(inner, env, body)) out.push_back(forall(alpha, n));
  } else if (const auto *x = as<Return>(t)) {
    for (const auto &p : value_at(theta, env, x->value)) out.push_back(up(p));
  } else if (const auto *x = as<LetAnn>(t)) {
    if (!closed_in(x->annotation, scope)) return {};
    bool ok = false;
    for (const auto &h : value_at(theta, env, x->head)) {
      const auto *d = as<Down>(h);
      if (d == nullptr) continue;
      for (const auto &r : spine_results(theta, env, x->args, d->body,
                                         {x->annotation}, 0)) {
        if (as<Up>(r) && neg_sub(theta, r, up(x->annotation), 0)) {
          ok = true;
          break;
        }
      }
      if (ok) break;
    }
    if (ok) out = synth_at(theta, env.extended(x->name, x->annotation), x->cont);
  } else if (const auto *x = as<Let>(t)) {
    for (const auto &h : value_at(theta, env, x->head)) {
      const auto *d = as<Down>(h);
      if (d == nullptr) continue;
      std::vector<PosRef> returned;
      for (const auto &r : spine_results(theta, env, x->args, d->body, {}, 0))
        if (const auto *u = as<Up>(r)) returned.push_back(u->body);
      if (returned.empty()) continue;
      const PosRef &q = returned.front();
      bool unambiguous = std::all_of(
          returned.begin(), returned.end(), [&](const PosRef &p) {
            return pos_sub(theta, q, p, 0) && pos_sub(theta, p, q, 0);
          });
      if (!unambiguous) continue;
      for (auto &n : synth_at(theta, env.extended(x->name, q), x->cont))
        out.push_back(std::move(n));
    }
  }
  return dedupe(std::move(out));
}

std::vector<NegRef> Oracle::spine_results(const DeclContext &theta,
                                          const TypeEnv &env, const ArgList &s,
                                          const NegRef &head,
                                          const std::vector<Type> &extra_sources,
                                          std::size_t elims) {
  std::vector<std::vector<PosRef>> arg_types;
  std::vector<Type> sources{head};
  for (const auto &source : extra_sources) sources.push_back(source);
  for (const auto &v : s) {
    arg_types.push_back(value_at(theta, env, v));
    if (arg_types.back().empty()) return {};
    for (const auto &p : arg_types.back()) sources.emplace_back(p);
  }
  CandidateUniverse universe = candidates(theta, sources);
  std::vector<NegRef> out;
  spine_search(theta, arg_types, 0, head, universe, elims, out);
  return dedupe(std::move(out));
}

void Oracle::spine_search(const DeclContext &theta,
                          const std::vector<std::vector<PosRef>> &arg_types,
                          std::size_t from, const NegRef &head,
                          const CandidateUniverse &universe, std::size_t elims,
                          std::vector<NegRef> &out) {
  if (from == arg_types.size()) out.push_back(head);
  if (const auto *a = as<Forall>(head)) {
    note_elims(elims + 1);
    if (free_uvars(a->body).count(a->binder) == 0) {
      // Every instantiation leaves the body unchanged.
      spine_search(theta, arg_types, from, a->body, universe, elims + 1, out);
      return;
    }
    for (const auto &p : universe)
      spine_search(theta, arg_types, from, subst_type(p, a->binder, a->body),
                   universe, elims + 1, out);
    return;
  }
  if (from == arg_types.size()) return;
  if (const auto *a = as<Arrow>(head)) {
    for (const auto &p : arg_types[from]) {
      if (pos_sub(theta, p, a->domain, 0)) {
        spine_search(theta, arg_types, from + 1, a->codomain, universe, elims, out);
        return;  // the remaining spine does not depend on which p matched
      }
    }
  }
}

std::vector<PosRef> Oracle::synth_value(const DeclContext &theta,
                                        const TypeEnv &env, const ValueRef &v) {
  return value_at(theta, env, v);
}

std::vector<NegRef> Oracle::synth(const DeclContext &theta, const TypeEnv &env,
                                  const CompRef &t) {
  return synth_at(theta, env, t);
}

std::vector<NegRef> Oracle::synth_spine(const DeclContext &theta,
                                        const TypeEnv &env, const ArgList &s,
                                        const NegRef &head) {
  return spine_results(theta, env, s, head, {}, 0);
}

// ---------------------------------------------------------------------------
// Completions of algorithmic instances
// ---------------------------------------------------------------------------

namespace {

struct OpenVars {
  std::vector<std::string> names;
  std::vector<DeclContext> prefixes;
};

// Unsolved existentials of `free` in context order, each with the universals
// its solution may mention. Returns false if `free` names an existential
// theta does not bind.
bool open_vars(const AlgContext &theta, const NameSet &free, OpenVars &out) {
  NameSet bound = theta.existentials();
  for (const auto &e : free)
    if (bound.count(e) == 0) return false;
  DeclContext prefix;
  for (const auto &entry : theta.entries()) {
    if (const auto *u = std::get_if<Universal>(&entry)) {
      prefix.push_back(u->name);
    } else if (const auto *x = std::get_if<Unsolved>(&entry)) {
      if (free.count(x->name)) {
        out.names.push_back(x->name);
        out.prefixes.push_back(prefix);
      }
    }
  }
  return true;
}

}  // namespace

bool Oracle::exists_completion(const AlgContext &theta, const PosRef &p,
                               const PosRef &q) {
  PosRef open = apply_context(theta, q);
  OpenVars vars;
  if (!open_vars(theta, free_evars(open), vars)) return false;
  std::vector<CandidateUniverse> choices;
  for (const auto &prefix : vars.prefixes) choices.push_back(candidates(prefix, {p}));
  DeclContext decl = erase_context(theta);
  EvarSolutions sols;
  return enumerate(vars.names, choices, 0, sols, [&](const EvarSolutions &s) {
    return pos_sub(decl, p, subst_evars(s, open), 0);
  });
}

bool Oracle::exists_completion(const AlgContext &theta, const NegRef &n,
                               const NegRef &m) {
  NegRef open = apply_context(theta, n);
  OpenVars vars;
  if (!open_vars(theta, free_evars(open), vars)) return false;
  std::vector<CandidateUniverse> choices;
  for (const auto &prefix : vars.prefixes) choices.push_back(candidates(prefix, {m}));
  DeclContext decl = erase_context(theta);
  EvarSolutions sols;
  return enumerate(vars.names, choices, 0, sols, [&](const EvarSolutions &s) {
    return neg_sub(decl, subst_evars(s, open), m, 0);
  });
}

bool decl_subtype(const DeclContext &theta, const Type &a, const Type &b,
                  const CandidateUniverse &universe, Budget budget) {
  return Oracle(budget, universe).subtype(theta, a, b);
}

bool decl_iso(const DeclContext &theta, const Type &a, const Type &b,
              const CandidateUniverse &universe, Budget budget) {
  return Oracle(budget, universe).iso(theta, a, b);
}

std::vector<NegRef> decl_synth(const DeclContext &theta, const TypeEnv &env,
                               const CompRef &t, const CandidateUniverse &universe,
                               Budget budget) {
  return Oracle(budget, universe).synth(theta, env, t);
}

}  // namespace polarf::oracle
