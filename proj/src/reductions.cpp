#include "ucp/reductions.hpp"

#include <algorithm>
#include <unordered_map>

#include "ucp/oracle.hpp"

namespace ucp {

UnsatOracle UnsatOracle::empty_clause() {
  return {"U0", [](const ClauseSet& F) { return F.has_empty_clause(); }};
}

UnsatOracle UnsatOracle::unsatisfiable() {
  return {"USAT", [](const ClauseSet& F) { return !oracle::satisfiable(F); }};
}

namespace {

class Reducer {
 public:
  /// oracle == nullptr means U_0.
  Reducer(const UnsatOracle* oracle, std::span<const Literal> order) : oracle_(oracle) {
    for (std::size_t i = 0; i < order.size(); ++i) rank_.emplace(order[i].code(), i);
  }

  ClauseSet run(unsigned k, const ClauseSet& F) {
    if (k == 0) return level0(F) ? ClauseSet::bottom() : F;
    if (!oracle_ && F.has_empty_clause()) return ClauseSet::bottom();
    if (memo_.size() < k + 1) memo_.resize(k + 1);
    if (auto it = memo_[k].find(F); it != memo_[k].end()) return it->second;

    ClauseSet G = F;
    while (true) {
      std::optional<Literal> forced = (k == 1 && !oracle_) ? first_unit(G) : first_failed(k, G);
      if (!forced) break;
      G = apply_assignment(assign_true(*forced), G);
      if (!oracle_ && G.has_empty_clause()) {
        G = ClauseSet::bottom();
        break;
      }
    }
    memo_[k].emplace(F, G);
    return G;
  }

 private:
  bool level0(const ClauseSet& G) const {
    return oracle_ ? oracle_->contains(G) : G.has_empty_clause();
  }

  std::vector<Literal> ordered(std::vector<Literal> lits) const {
    if (rank_.empty()) return lits;
    std::stable_sort(lits.begin(), lits.end(), [&](Literal a, Literal b) {
      return rank_of(a) < rank_of(b);
    });
    return lits;
  }

  std::size_t rank_of(Literal x) const {
    auto it = rank_.find(x.code());
    return it == rank_.end() ? rank_.size() + x.code() : it->second;
  }

  // r_0(<x -> 0> * G) = {⊥} under U_0 exactly when {x} ∈ G.
  std::optional<Literal> first_unit(const ClauseSet& G) const {
    std::vector<Literal> units;
    for (const Clause& c : G)
      if (c.size() == 1) units.push_back(c[0]);
    if (units.empty()) return std::nullopt;
    return ordered(std::move(units)).front();
  }

  std::optional<Literal> first_failed(unsigned k, const ClauseSet& G) {
    for (Literal x : ordered(G.lits())) {
      if (run(k - 1, apply_assignment(assign_true(~x), G)).is_bottom()) return x;
    }
    return std::nullopt;
  }

  const UnsatOracle* oracle_;
  std::unordered_map<std::uint32_t, std::size_t> rank_;
  std::vector<std::unordered_map<ClauseSet, ClauseSet>> memo_;
};

}  // namespace

ClauseSet rk(unsigned k, const ClauseSet& F) { return Reducer(nullptr, {}).run(k, F); }

ClauseSet rk(unsigned k, const ClauseSet& F, std::span<const Literal> probe_order) {
  return Reducer(nullptr, probe_order).run(k, F);
}

ClauseSet rk_oracle(unsigned k, const ClauseSet& F, const UnsatOracle& U) {
  return Reducer(&U, {}).run(k, F);
}

Propagation unit_propagate(const ClauseSet& F) {
  Propagation p{F, {}, false};
  while (true) {
    if (p.result.has_empty_clause()) {
      p.result = ClauseSet::bottom();
      p.conflict = true;
      return p;
    }
    const Clause* unit = nullptr;
    for (const Clause& c : p.result)
      if (c.size() == 1) {
        unit = &c;
        break;
      }
    if (!unit) return p;
    const Literal x = (*unit)[0];
    p.trail.set_true(x);
    p.result = apply_assignment(assign_true(x), p.result);
  }
}

ForcedLiterals forced_literals(const ClauseSet& F) {
  if (!oracle::satisfiable(F)) return ForcedLiterals::all();
  std::vector<Literal> forced;
  for (Literal x : F.lits()) {
    if (!oracle::satisfiable(apply_assignment(assign_true(~x), F))) forced.push_back(x);
  }
  return ForcedLiterals::finite(std::move(forced));
}

ClauseSet rk_inf(const ClauseSet& F) {
  const ForcedLiterals forced = forced_literals(F);
  if (forced.is_all()) return ClauseSet::bottom();
  PartialAssignment phi;
  for (Literal x : forced.literals()) phi.set_true(x);
  return apply_assignment(phi, F);
}

bool implies_k(const ClauseSet& F, const Clause& C, unsigned k) {
  return rk(k, apply_assignment(assignment_from_clause(C), F)).is_bottom();
}

}  // namespace ucp
