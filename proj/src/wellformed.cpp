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


#include "polarf/wellformed.hpp"

#include <set>

#include "polarf/types.hpp"

namespace polarf {

namespace {

struct Checker {
  NameSet universals;
  NameSet existentials;
  const Signature *sig;

  std::string ctor(const std::string &name, const std::vector<PosRef> &args,
                   Polarity polarity) {
    if (sig != nullptr) {
      auto info = sig->lookup(name);
      if (!info) return "unknown type constructor " + name;
      if (info->polarity != polarity)
        return "type constructor " + name + " used at the wrong polarity";
      if (info->arity != args.size())
        return "type constructor " + name + " expects " +
               std::to_string(info->arity) + " arguments, given " +
               std::to_string(args.size());
    }
    for (const auto &a : args)
      if (auto p = pos(a); !p.empty()) return p;
    return {};
  }

  std::string pos(const PosRef &t) {
    if (const auto *x = as<UVar>(t))
      return universals.count(x->name) ? "" : "type variable " + x->name + " is not in scope";
    if (const auto *x = as<EVar>(t))
      return existentials.count(x->name) ? ""
                                         : "existential ^" + x->name + " is not in scope";
    if (const auto *x = as<Down>(t)) return neg(x->body);
    const auto &d = std::get<Data>(t->node);
    return ctor(d.ctor, d.args, Polarity::Positive);
  }

  std::string neg(const NegRef &t) {
    if (const auto *x = as<Arrow>(t)) {
      if (auto p = pos(x->domain); !p.empty()) return p;
      return neg(x->codomain);
    }
    if (const auto *x = as<Forall>(t)) {
      // Shadowing is allowed: rename-apart is implicit in alpha-equivalence.
      bool fresh = universals.insert(x->binder).second;
      std::string p = neg(x->body);
      if (fresh) universals.erase(x->binder);
      return p;
    }
    if (const auto *x = as<Up>(t)) return pos(x->body);
    const auto &d = std::get<NegData>(t->node);
    return ctor(d.ctor, d.args, Polarity::Negative);
  }
};

Checker checker_for(const AlgContext &theta, const Signature *sig) {
  Checker c{{}, {}, sig};
  for (const auto &e : theta.entries()) {
    if (is_existential(e))
      c.existentials.insert(entry_name(e));
    else
      c.universals.insert(entry_name(e));
  }
  return c;
}

}  // namespace

std::string wf_type_problem(const AlgContext &theta, const Type &t,
                            const Signature *sig) {
  Checker c = checker_for(theta, sig);
  if (const auto *p = std::get_if<PosRef>(&t)) return c.pos(*p);
  return c.neg(std::get<NegRef>(t));
}

std::string wf_context_problem(const AlgContext &theta, const Signature *sig) {
  Checker c{{}, {}, sig};
  for (const auto &e : theta.entries()) {
    const std::string &name = entry_name(e);
    if (const auto *s = std::get_if<Solved>(&e)) {
      if (!is_ground(s->solution))
        return "solution of ^" + name + " is not ground";
      if (auto p = c.pos(s->solution); !p.empty())
        return "solution of ^" + name + ": " + p;
    }
    if (is_existential(e)) {
      if (!c.existentials.insert(name).second)
        return "existential ^" + name + " is declared twice";
    } else if (!c.universals.insert(name).second) {
      return "type variable " + name + " is declared twice";
    }
  }
  return {};
}

std::string wf_env_problem(const AlgContext &theta, const TypeEnv &env,
                           const Signature *sig) {
  for (const auto &[name, type] : env.bindings()) {
    if (!is_ground(type)) return "type of " + name + " is not ground";
    if (auto p = wf_type_problem(theta, type, sig); !p.empty())
      return "type of " + name + ": " + p;
  }
  return {};
}

}  // namespace polarf
