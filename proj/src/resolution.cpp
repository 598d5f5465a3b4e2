#include "ucp/resolution.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "ucp/io.hpp"
#include "ucp/reductions.hpp"

namespace ucp {

std::optional<Clause> resolvent(const Clause& C, const Clause& D) {
  const std::vector<Literal> clash = C.clashes(D);
  if (clash.size() != 1) return std::nullopt;
  const Literal x = clash.front();
  return union_unchecked(C.without(x), D.without(~x));
}

namespace {

// Drops every clause that has a proper subclause in the set.
std::vector<Clause> subsumption_reduce(std::vector<Clause> cls) {
  std::sort(cls.begin(), cls.end(), [](const Clause& a, const Clause& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
  std::vector<Clause> kept;
  for (const Clause& c : cls) {
    if (std::none_of(kept.begin(), kept.end(), [&](const Clause& d) { return d.subset_of(c); }))
      kept.push_back(c);
  }
  return kept;
}

}  // namespace

ClauseSet prime_implicates(const ClauseSet& F) {
  std::vector<Clause> S = subsumption_reduce(F.clauses());
  while (true) {
    if (!S.empty() && S.front().empty()) return ClauseSet::bottom();
    std::vector<Clause> fresh;
    for (std::size_t i = 0; i < S.size(); ++i) {
      for (std::size_t j = i + 1; j < S.size(); ++j) {
        auto r = resolvent(S[i], S[j]);
        if (!r) continue;
        if (r->empty()) return ClauseSet::bottom();
        if (std::any_of(S.begin(), S.end(), [&](const Clause& d) { return d.subset_of(*r); }))
          continue;
        fresh.push_back(std::move(*r));
      }
    }
    if (fresh.empty()) break;
    S.insert(S.end(), fresh.begin(), fresh.end());
    S = subsumption_reduce(std::move(S));
  }
  return ClauseSet(std::move(S));
}

bool is_stable_modulo_subsumption(const ClauseSet& F) {
  for (std::size_t i = 0; i < F.c(); ++i) {
    for (std::size_t j = i + 1; j < F.c(); ++j) {
      auto r = resolvent(F[i], F[j]);
      if (r && !F.subsumes(*r)) return false;
    }
  }
  return true;
}

// --------------------------------------------------------- ResolutionTree

ResolutionTree ResolutionTree::leaf(Clause axiom) {
  auto n = std::make_shared<Node>();
  n->clause = std::move(axiom);
  return ResolutionTree(std::move(n));
}

ResolutionTree ResolutionTree::resolve(ResolutionTree left, ResolutionTree right) {
  const std::vector<Literal> clash = left.clause().clashes(right.clause());
  if (clash.size() != 1)
    throw PreconditionError("cannot resolve " + to_string(left.clause()) + " with " +
                            to_string(right.clause()));
  auto n = std::make_shared<Node>();
  n->pivot = clash.front();
  n->clause = union_unchecked(left.clause().without(n->pivot), right.clause().without(~n->pivot));
  const unsigned a = left.hts(), b = right.hts();
  n->hts = a == b ? a + 1 : std::max(a, b);
  n->height = 1 + std::max(left.height(), right.height());
  n->leaves = left.leaf_count() + right.leaf_count();
  n->left = std::move(left.node_);
  n->right = std::move(right.node_);
  return ResolutionTree(std::move(n));
}

ResolutionTree ResolutionTree::left() const {
  if (is_leaf()) throw PreconditionError("leaf has no children");
  return ResolutionTree(node_->left);
}

ResolutionTree ResolutionTree::right() const {
  if (is_leaf()) throw PreconditionError("leaf has no children");
  return ResolutionTree(node_->right);
}

Literal ResolutionTree::pivot() const {
  if (is_leaf()) throw PreconditionError("leaf has no pivot");
  return node_->pivot;
}

unsigned horton_strahler(const ResolutionTree& T) {
  if (T.is_leaf()) return 0;
  const unsigned a = horton_strahler(T.left());
  const unsigned b = horton_strahler(T.right());
  return a == b ? a + 1 : std::max(a, b);
}

bool verify_tree(const ResolutionTree& T, const ClauseSet& F) {
  if (T.is_leaf()) return F.contains(T.clause());
  const ResolutionTree l = T.left(), r = T.right();
  if (!l.clause().contains(T.pivot()) || !r.clause().contains(~T.pivot())) return false;
  auto res = resolvent(l.clause(), r.clause());
  return res && *res == T.clause() && verify_tree(l, F) && verify_tree(r, F);
}

// ------------------------------------------------------ ⊢_k tree search

bool derives_nested(const ClauseSet& F, const Clause& C, unsigned k) { return implies_k(F, C, k); }

namespace {

struct OutOfNodes {};

// Der(C, k): some tree of Horton-Strahler number <= k derives a subclause
// of C. Either an axiom is contained in C, or for a variable v outside C one
// branch derives within C+v at level k and the other within C+v̄ at k-1.
class WitnessSearch {
 public:
  WitnessSearch(const ClauseSet& F, std::uint64_t budget) : F_(F), vars_(F.vars()), budget_(budget) {}

  std::optional<ResolutionTree> der(const Clause& C, unsigned k) {
    if (++nodes_ > budget_) throw OutOfNodes{};
    auto& seen = memo_[C];
    // Success at a lower level and failure at a higher one both transfer.
    for (const auto& [level, tree] : seen) {
      if (tree && level <= k) return tree;
      if (!tree && level >= k) return std::nullopt;
    }
    std::optional<ResolutionTree> out = search(C, k);
    memo_[C].emplace(k, out);
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  std::optional<ResolutionTree> search(const Clause& C, unsigned k) {
    for (const Clause& D : F_)
      if (D.subset_of(C)) return ResolutionTree::leaf(D);
    if (k == 0) return std::nullopt;
    for (Variable v : vars_) {
      if (C.contains_var(v)) continue;
      const Literal pos(v, true), neg(v, false);
      for (auto [ka, kb] : {std::pair{k, k - 1}, std::pair{k - 1, k}}) {
        auto a = der(C.with(pos), ka);
        if (!a) continue;
        if (!a->clause().contains(pos)) return a;
        auto b = der(C.with(neg), kb);
        if (!b) continue;
        if (!b->clause().contains(neg)) return b;
        return ResolutionTree::resolve(*a, *b);
      }
    }
    return std::nullopt;
  }

  const ClauseSet& F_;
  std::vector<Variable> vars_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::unordered_map<Clause, std::map<unsigned, std::optional<ResolutionTree>>> memo_;
};

}  // namespace

DerivationResult derives_nested_witness(const ClauseSet& F, const Clause& C, unsigned k,
                                        std::uint64_t max_nodes) {
  WitnessSearch search(F, max_nodes);
  DerivationResult out;
  try {
    for (unsigned j = 0; j <= k; ++j) {
      if (auto t = search.der(C, j)) {
        out.outcome = Derivability::Derivable;
        out.witness = std::move(t);
        break;
      }
    }
  } catch (const OutOfNodes&) {
    out.outcome = Derivability::BudgetExhausted;
  }
  out.nodes = search.nodes();
  return out;
}

// --------------------------------------------------------------- closures

ClauseSet height_bounded_closure(const ClauseSet& F, unsigned k) {
  std::vector<Clause> all(F.begin(), F.end());
  std::unordered_set<Clause> seen(all.begin(), all.end());
  std::size_t fresh_from = 0;  // pairs inside [0, fresh_from) were done in earlier rounds
  for (unsigned round = 0; round < k; ++round) {
    const std::size_t end = all.size();
    std::vector<Clause> added;
    for (std::size_t j = fresh_from; j < end; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        auto r = resolvent(all[i], all[j]);
        if (r && seen.insert(*r).second) added.push_back(std::move(*r));
      }
    }
    if (added.empty()) break;
    fresh_from = end;
    all.insert(all.end(), added.begin(), added.end());
  }
  return ClauseSet(std::move(all));
}

ClauseSet k_resolution_closure(const ClauseSet& F, unsigned k, bool stop_on_empty) {
  std::vector<Clause> all(F.begin(), F.end());
  std::unordered_set<Clause> seen(all.begin(), all.end());
  if (stop_on_empty && F.has_empty_clause()) return F;
  for (std::size_t j = 0; j < all.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (all[i].size() > k && all[j].size() > k) continue;
      auto r = resolvent(all[i], all[j]);
      if (!r || !seen.insert(*r).second) continue;
      const bool empty = r->empty();
      all.push_back(std::move(*r));
      if (empty && stop_on_empty) return ClauseSet(std::move(all));
    }
  }
  return ClauseSet(std::move(all));
}

nlohmann::json to_json(const ResolutionTree& T) {
  nlohmann::json j;
  j["clause"] = to_json(T.clause());
  if (T.is_leaf()) {
    j["axiom"] = true;
    return j;
  }
  j["pivot"] = T.pivot().to_dimacs();
  j["hts"] = T.hts();
  j["left"] = to_json(T.left());
  j["right"] = to_json(T.right());
  return j;
}

}  // namespace ucp
