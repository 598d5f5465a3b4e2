// Resolution: resolvents, prime implicates, resolution trees and the
// Horton-Strahler number, nested input resolution ⊢_k, and the bounded
// closures used for Canon_k and width-hardness.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "json.hpp"

#include "ucp/core.hpp"

namespace ucp {

/// (C ∪ D) \ {x, x̄} when C and D clash in exactly one literal x, nullopt
/// otherwise (no clash, or two or more).
std::optional<Clause> resolvent(const Clause& C, const Clause& D);

/// prc0(F): resolution closure with subsumption elimination. {⊥} for
/// unsatisfiable F, ⊤ for ⊤.
ClauseSet prime_implicates(const ClauseSet& F);

/// Every resolvent of two clauses of F contains some clause of F.
bool is_stable_modulo_subsumption(const ClauseSet& F);

class ResolutionTree {
 public:
  static ResolutionTree leaf(Clause axiom);
  /// Node over two subtrees; throws PreconditionError unless their clauses
  /// clash in exactly one literal.
  static ResolutionTree resolve(ResolutionTree left, ResolutionTree right);

  bool is_leaf() const { return !node_->left; }
  const Clause& clause() const { return node_->clause; }
  ResolutionTree left() const;
  ResolutionTree right() const;
  /// The clashing literal as it occurs in left().clause().
  Literal pivot() const;

  unsigned hts() const { return node_->hts; }
  unsigned height() const { return node_->height; }
  std::size_t leaf_count() const { return node_->leaves; }

 private:
  struct Node {
    Clause clause;
    std::shared_ptr<const Node> left, right;
    Literal pivot;
    unsigned hts = 0;
    unsigned height = 0;
    std::size_t leaves = 1;
  };
  explicit ResolutionTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Recomputed from the structure, ignoring the cached value.
unsigned horton_strahler(const ResolutionTree& T);

/// Structural check: leaves are clauses of F, every inner clause is the
/// resolvent of its children on the recorded pivot.
bool verify_tree(const ResolutionTree& T, const ClauseSet& F);

enum class Derivability { Derivable, NotDerivable, BudgetExhausted };

struct DerivationResult {
  Derivability outcome = Derivability::NotDerivable;
  /// Present iff outcome == Derivable; derives a subclause of the query with
  /// the least possible Horton-Strahler number.
  std::optional<ResolutionTree> witness;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultWitnessBudget = 1'000'000;

/// F ⊢_k C through the equivalent test F ⊨_k C.
bool derives_nested(const ClauseSet& F, const Clause& C, unsigned k);
/// Explicit tree search for F ⊢_k C, iterative deepening on the
/// Horton-Strahler number.
DerivationResult derives_nested_witness(const ClauseSet& F, const Clause& C, unsigned k,
                                        std::uint64_t max_nodes = kDefaultWitnessBudget);

/// H_k: H_0 = F, H_{i+1} = H_i plus all resolvents of pairs in H_i. No
/// subsumption pruning.
ClauseSet height_bounded_closure(const ClauseSet& F, unsigned k);

/// Least superset of F closed under resolution steps where some parent has
/// length <= k. With stop_on_empty the computation ends once ⊥ appears.
ClauseSet k_resolution_closure(const ClauseSet& F, unsigned k, bool stop_on_empty = false);

nlohmann::json to_json(const ResolutionTree& T);

}  // namespace ucp
