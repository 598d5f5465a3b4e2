// Equivalence, k-bases, and minimum k-bases: exact search over subsets of
// the prime implicates, and the polynomial pipeline for 2-CNF.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ucp/core.hpp"

namespace ucp {

/// Hardness bound for bases; nullopt stands for ∞.
using Level = std::optional<unsigned>;
inline constexpr Level kUnbounded = std::nullopt;

bool equivalent(const ClauseSet& F, const ClauseSet& G);

/// hd(F) <= k, and removing any clause or any literal occurrence gives a
/// clause-set that is not equivalent to F or has hardness above k.
bool is_k_base(const ClauseSet& F, Level k);

struct BaseSearchResult {
  ClauseSet base;
  std::size_t cardinality = 0;
  std::size_t size = 0;
  /// Optimality certified. False only when a search budget ran out.
  bool exact = true;
  std::vector<std::string> trace;
};

inline constexpr std::uint64_t kDefaultBaseBudget = 1'000'000;

/// Minimum-cardinality F' ⊆ F equivalent to F with hd(F') <= k. Ties go to
/// the least F' in canonical order. Requires F = prc0(F). budget bounds the
/// number of candidate subsets tested; on exhaustion the best base found so
/// far (F itself if none) is returned with exact = false.
BaseSearchResult min_base_from_primes(const ClauseSet& F, Level k,
                                      std::uint64_t budget = kDefaultBaseBudget);

/// Literal implication graph of a 2-CNF: clause {a, b} gives ā -> b and
/// b̄ -> a. Vertices are literal codes; only literals of var(F) occur.
class ImplicationDigraph {
 public:
  /// Throws PreconditionError on a clause longer than 2. Unit clauses {a}
  /// give the arc ā -> a.
  explicit ImplicationDigraph(const ClauseSet& F);

  const std::vector<Literal>& vertices() const { return vertices_; }
  const std::vector<std::pair<Literal, Literal>>& arcs() const { return arcs_; }
  /// u reaches v by a path of length >= 0.
  bool reaches(Literal u, Literal v) const;
  /// Strongly connected components, each sorted, ordered by least literal.
  std::vector<std::vector<Literal>> components() const;

 private:
  std::size_t index(Literal x) const;
  std::vector<Literal> vertices_;
  std::vector<std::pair<Literal, Literal>> arcs_;
  std::vector<std::vector<bool>> reach_;
};

/// prc0 of a 2-CNF from the transitive closure of its implication graph.
ClauseSet prime_implicates_2cnf(const ClauseSet& F);

/// Shortest equivalent k-base of a 2-CNF (clauses of length <= 2).
BaseSearchResult min_base_2cnf(const ClauseSet& F, Level k);

}  // namespace ucp
