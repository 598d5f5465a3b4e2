// Brute-force reference implementations.
//
// Nothing here calls into the reduction, resolution or hardness code: the
// search and the derivation closure are written from the definitions on a
// private bitmask representation, so the main modules can be checked
// against them.
#pragma once

#include <cstdint>
#include <optional>

#include "ucp/core.hpp"

namespace ucp::oracle {

struct OracleBudget {
  std::size_t max_variables = 8;
  std::uint64_t max_nodes = 50'000'000;
};

/// Default limits: n <= 8 for prime enumeration, n <= 6 for hardness.
inline constexpr OracleBudget kPrimeBudget{8, 50'000'000};
inline constexpr OracleBudget kHardnessBudget{6, 50'000'000};

struct SatResult {
  bool satisfiable = false;
  /// Total assignment over var(F) when satisfiable.
  std::optional<PartialAssignment> model;
};

/// Complete backtracking search. Throws BudgetExhausted past max_nodes.
SatResult sat_complete(const ClauseSet& F, std::uint64_t max_nodes = 50'000'000);
bool satisfiable(const ClauseSet& F);
/// F ⊨ C, decided as unsatisfiability of F plus the units of C̄.
bool implies(const ClauseSet& F, const Clause& C);

/// Enumerate every clause over var(F), keep the implied, subset-minimal ones.
/// Throws GuardRefusal when n(F) exceeds budget.max_variables.
ClauseSet prime_implicates_bruteforce(const ClauseSet& F, OracleBudget budget = kPrimeBudget);

/// Smallest k such that ⊥ is derivable from F by a resolution tree of
/// Horton-Strahler number at most k. Precondition: F unsatisfiable.
unsigned tree_hardness_unsat_bruteforce(const ClauseSet& F, OracleBudget budget = kHardnessBudget);

/// Max of tree_hardness_unsat_bruteforce(φ * F) over every φ on var(F) with
/// φ * F unsatisfiable; 0 for ⊤.
unsigned hardness_bruteforce(const ClauseSet& F, OracleBudget budget = kHardnessBudget);

}  // namespace ucp::oracle
