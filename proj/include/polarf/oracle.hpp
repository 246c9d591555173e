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

// Bounded search for the declarative subtyping and typing relations.
//
// Quantifier instantiation in the declarative rules may pick any
// well-formed type. The search draws instantiations from a finite candidate
// universe instead: the closed positive subterms of the types in the
// current goal, of the environment and annotations, a fixed base set
// (Int, Bool), and every universal variable in scope. The algorithm only
// ever solves an existential with a subterm of a ground side, so this covers
// everything the algorithm can reach. On other instances the oracle may
// under-approximate the declarative relation.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "polarf/context.hpp"
#include "polarf/syntax.hpp"

namespace polarf::oracle {

struct Budget {
  /// Maximum candidates considered for one instantiation.
  std::size_t max_universe = 64;
  /// Maximum quantifier eliminations along one branch of the search.
  std::size_t max_eliminations = 10;
};

/// The search hit a budget limit. Distinct from a negative answer.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string &what)
      : std::runtime_error("oracle budget exceeded: " + what) {}
};

using CandidateUniverse = std::vector<PosRef>;

/// Closed (w.r.t. theta) positive subterms of `sources`, the base types, and
/// the universals of theta; deduplicated up to alpha-equivalence, in a
/// deterministic order.
CandidateUniverse candidate_universe(const std::vector<Type> &sources,
                                     const DeclContext &theta);

class Oracle {
 public:
  explicit Oracle(Budget budget = {}, CandidateUniverse extra = {});

  bool subtype(const DeclContext &theta, const Type &a, const Type &b);
  bool iso(const DeclContext &theta, const Type &a, const Type &b);

  /// All synthesizable types, up to alpha-equivalence. Empty when the term
  /// is not typeable within the universe.
  std::vector<PosRef> synth_value(const DeclContext &theta, const TypeEnv &env,
                                  const ValueRef &v);
  std::vector<NegRef> synth(const DeclContext &theta, const TypeEnv &env,
                            const CompRef &t);
  std::vector<NegRef> synth_spine(const DeclContext &theta, const TypeEnv &env,
                                  const ArgList &s, const NegRef &head);

  /// Is there a completion of the unsolved existentials of theta (each drawn
  /// from the candidates well-formed in its prefix) under which the ground
  /// judgment holds? The ground side is `p` for positive judgments and `m`
  /// for negative ones.
  bool exists_completion(const AlgContext &theta, const PosRef &p,
                         const PosRef &q);
  bool exists_completion(const AlgContext &theta, const NegRef &n,
                         const NegRef &m);

  /// Deepest elimination count reached so far by any branch.
  std::size_t max_eliminations_seen() const { return max_seen_; }

 private:
  bool pos_sub(const DeclContext &theta, const PosRef &p, const PosRef &q,
               std::size_t elims);
  bool neg_sub(const DeclContext &theta, const NegRef &n, const NegRef &m,
               std::size_t elims);
  bool neg_sub_uncached(const DeclContext &theta, const NegRef &n,
                        const NegRef &m, std::size_t elims);
  bool mutual(const DeclContext &theta, const std::vector<PosRef> &xs,
              const std::vector<PosRef> &ys, std::size_t elims);
  CandidateUniverse candidates(const DeclContext &theta,
                               const std::vector<Type> &goal_types) const;
  std::vector<NegRef> synth_at(const DeclContext &theta, const TypeEnv &env,
                               const CompRef &t);
  std::vector<PosRef> value_at(const DeclContext &theta, const TypeEnv &env,
                               const ValueRef &v);
  std::vector<NegRef> spine_results(const DeclContext &theta,
                                    const TypeEnv &env, const ArgList &s,
                                    const NegRef &head,
                                    const std::vector<Type> &extra_sources,
                                    std::size_t elims);
  void spine_search(const DeclContext &theta,
                    const std::vector<std::vector<PosRef>> &arg_types,
                    std::size_t from, const NegRef &head,
                    const CandidateUniverse &universe, std::size_t elims,
                    std::vector<NegRef> &out);
  void note_elims(std::size_t elims);

  Budget budget_;
  CandidateUniverse extra_;
  std::map<std::string, bool> memo_;
  std::size_t max_seen_ = 0;
};

bool decl_subtype(const DeclContext &theta, const Type &a, const Type &b,
                  const CandidateUniverse &universe = {}, Budget budget = {});
bool decl_iso(const DeclContext &theta, const Type &a, const Type &b,
              const CandidateUniverse &universe = {}, Budget budget = {});
std::vector<NegRef> decl_synth(const DeclContext &theta, const TypeEnv &env,
                               const CompRef &t,
                               const CandidateUniverse &universe = {},
                               Budget budget = {});

}  // namespace polarf::oracle
