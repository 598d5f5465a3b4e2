// The SLUR_k transition systems and their membership tests by direct
// simulation.
//
// SlurK:        F -> r_k(<x -> 1> * F) for x ∈ lit(F), unless that is {⊥}.
// AltSlurStarK: F -> φ * F for φ making k decisions w.r.t. F, unless {⊥}.
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ucp/core.hpp"

namespace ucp {

enum class SlurVariant { SlurK, AltSlurStarK };

struct TransitionConfig {
  unsigned k = 1;
  SlurVariant variant = SlurVariant::SlurK;
};

inline constexpr std::size_t kSlurMaxVars = 14;

/// Successor states in canonical order.
std::vector<ClauseSet> slur_successors(const ClauseSet& F, const TransitionConfig& cfg);

struct SlurExploration {
  /// Reachable states in breadth-first discovery order; states[0] is F.
  std::vector<ClauseSet> states;
  /// (from, to) indices into states.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  /// States without successors, canonical order.
  std::vector<ClauseSet> terminals;
};

/// Breadth-first reachability. Throws GuardRefusal when n(F) > max_vars.
SlurExploration slur_explore(const ClauseSet& F, const TransitionConfig& cfg,
                             std::size_t max_vars = kSlurMaxVars);
std::vector<ClauseSet> slur_terminal_set(const ClauseSet& F, const TransitionConfig& cfg,
                                         std::size_t max_vars = kSlurMaxVars);

/// SlurK:        r_k(F) ≠ {⊥} implies the terminal set is {⊤}.
/// AltSlurStarK: terminal set ≠ {F} implies it is {⊤}.
bool slur_member(const ClauseSet& F, const TransitionConfig& cfg,
                 std::size_t max_vars = kSlurMaxVars);

struct DecisionOutcome {
  PartialAssignment phi;
  /// φ * F.
  ClauseSet result;
  friend auto operator<=>(const DecisionOutcome&, const DecisionOutcome&) = default;
  friend bool operator==(const DecisionOutcome&, const DecisionOutcome&) = default;
};

/// Assignments making k decisions w.r.t. F, as produced by the recursion:
/// k = 0 gives r_1(F); k > 0 adds the ⊤-reaching outcomes of every k' < k and,
/// per literal x, <x -> 1> plus propagation followed by k-1 decisions.
/// A refuted branch is completed to a total assignment so φ * F = {⊥}.
std::vector<DecisionOutcome> k_decision_assignments(const ClauseSet& F, unsigned k);

}  // namespace ucp
