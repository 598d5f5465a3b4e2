// Generalised unit-clause propagation r_k, forced literals and r_∞.
//
// r_0(F) = {⊥} if ⊥ ∈ F, else F. r_{k+1} repeatedly applies <x -> 1> while
// some literal x has r_k(<x -> 0> * F) = {⊥}. r_1 is unit-clause propagation,
// r_2 failed-literal elimination. The relativised form r_k^U replaces the
// level-0 test by membership in an unsatisfiability oracle U.
#pragma once

#include <functional>
#include <span>
#include <string>

#include "ucp/core.hpp"

namespace ucp {

/// Membership test for a class U of unsatisfiable clause-sets containing {⊥}.
/// Callers assert stability under partial assignments; it is not checked.
struct UnsatOracle {
  std::string name;
  std::function<bool(const ClauseSet&)> contains;

  /// U_0 = {F : ⊥ ∈ F}. r_k^{U_0} = r_k.
  static UnsatOracle empty_clause();
  /// Every unsatisfiable clause-set, decided by complete search.
  static UnsatOracle unsatisfiable();
};

ClauseSet rk(unsigned k, const ClauseSet& F);
/// Same reduction with literals probed in the given priority order (unlisted
/// literals afterwards, canonical order). The result does not depend on it.
ClauseSet rk(unsigned k, const ClauseSet& F, std::span<const Literal> probe_order);
ClauseSet rk_oracle(unsigned k, const ClauseSet& F, const UnsatOracle& U);

struct Propagation {
  ClauseSet result;
  /// Assignments made, in order; applying them to F yields result unless a
  /// conflict was reached.
  PartialAssignment trail;
  bool conflict = false;
};
/// r_1 with its trail.
Propagation unit_propagate(const ClauseSet& F);

ForcedLiterals forced_literals(const ClauseSet& F);
ClauseSet rk_inf(const ClauseSet& F);

/// F ⊨_k C, i.e. r_k(φ_C * F) = {⊥}.
bool implies_k(const ClauseSet& F, const Clause& C, unsigned k);

}  // namespace ucp
