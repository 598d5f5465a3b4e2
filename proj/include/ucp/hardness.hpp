// Hardness measures hd, phd, whd and hd_U, and the class deciders built on
// them (UC_k, PC_k, Canon_k).
//
// Everything here is exponential in the worst case; deciding hd(F) <= k is
// coNP-complete for k >= 1. Intended for clause-sets of desk size.
#pragma once

#include <map>
#include <optional>

#include "ucp/core.hpp"
#include "ucp/reductions.hpp"

namespace ucp {

/// Default bound on n(F) for measures that enumerate all partial assignments.
inline constexpr std::size_t kEnumerationMaxVars = 12;

struct HardnessReport {
  unsigned value = 0;
  /// First prime implicate (canonical order) whose level equals value.
  std::optional<Clause> witness;
  std::map<Clause, unsigned> per_implicate_levels;
};

struct PHardnessReport {
  unsigned value = 0;
  /// Least φ (canonical order) needing level value; absent when value is 0.
  std::optional<PartialAssignment> witness;
};

struct WHardnessReport {
  unsigned value = 0;
  /// Prime implicate attaining value, or the assignment in AllAssignments mode.
  std::optional<Clause> witness;
  std::optional<PartialAssignment> witness_assignment;
};

/// Least k with r_k(F) = {⊥}. Throws PreconditionError on satisfiable F.
unsigned hardness_unsat(const ClauseSet& F);

/// max over C ∈ prc0(F) of the least k with F ⊨_k C; 0 for ⊤.
HardnessReport hardness(const ClauseSet& F);

/// Polynomial route for clause-sets with clauses of length <= 2: satisfiable
/// inputs have hd 0 or 1, unsatisfiable ones 0, 1 or 2. Throws
/// PreconditionError on a longer clause.
unsigned hardness_2cnf(const ClauseSet& F);

bool uc_member(const ClauseSet& F, unsigned k);

/// Least k with r_k(φ * F) = r_∞(φ * F) for every φ over var(F), as equal
/// clause-sets. Throws GuardRefusal when n(F) > max_vars.
PHardnessReport p_hardness(const ClauseSet& F, std::size_t max_vars = kEnumerationMaxVars);
bool pc_member(const ClauseSet& F, unsigned k, std::size_t max_vars = kEnumerationMaxVars);

enum class WhdMode {
  /// Maximise over φ_C for C ∈ prc0(F).
  PrimeImplicates,
  /// Maximise over every φ with φ * F unsatisfiable (guarded).
  AllAssignments,
};

/// Least k such that every unsatisfiable instance considered refutes by
/// k-resolution.
WHardnessReport w_hardness(const ClauseSet& F, WhdMode mode = WhdMode::PrimeImplicates,
                           std::size_t max_vars = kEnumerationMaxVars);
/// Least k with ⊥ ∈ k_resolution_closure(F, k); F unsatisfiable.
unsigned w_hardness_unsat(const ClauseSet& F);

/// hd with level-0 detection by U. The guard applies to satisfiable F only.
unsigned hardness_oracle(const ClauseSet& F, const UnsatOracle& U,
                         std::size_t max_vars = kEnumerationMaxVars);

/// Every C ∈ prc0(F) is derivable by a resolution tree of height <= k.
/// By default a derived subclause of C counts; strict demands C itself.
bool canon_member(const ClauseSet& F, unsigned k, bool strict = false);

/// φ with n(φ) = k and hd(φ * F) = hd(F) - k, built one literal at a time.
/// Precondition: F unsatisfiable and k <= hd(F).
PartialAssignment hardness_gradation_witness(const ClauseSet& F, unsigned k);

}  // namespace ucp
