#include "ucp/oracle.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace ucp::oracle {

namespace {

// ------------------------------------------------------------ DPLL search

class Backtracker {
 public:
  Backtracker(const ClauseSet& F, std::uint64_t max_nodes) : max_nodes_(max_nodes) {
    vars_ = F.vars();
    for (const Clause& c : F) {
      std::vector<int> lits;
      for (Literal x : c) {
        const int idx = index_of(x.var());
        lits.push_back(x.positive() ? idx + 1 : -(idx + 1));
      }
      clauses_.push_back(std::move(lits));
    }
    value_.assign(vars_.size(), 0);
  }

  bool run() { return search(); }

  PartialAssignment model() const {
    PartialAssignment phi;
    for (std::size_t i = 0; i < vars_.size(); ++i) phi.bind(vars_[i], value_[i] >= 0);
    return phi;
  }

 private:
  int index_of(Variable v) const {
    return static_cast<int>(std::lower_bound(vars_.begin(), vars_.end(), v) - vars_.begin());
  }

  // +1 true, -1 false, 0 open
  int lit_value(int lit) const {
    const int v = value_[std::abs(lit) - 1];
    return lit > 0 ? v : -v;
  }

  bool search() {
    if (++nodes_ > max_nodes_) throw BudgetExhausted("SAT search exceeded its node budget");
    std::vector<int> trail;
    // Unit propagation to a fixpoint; any falsified clause ends the branch.
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& c : clauses_) {
        int open = 0, last = 0;
        bool sat = false;
        for (int lit : c) {
          const int v = lit_value(lit);
          if (v > 0) {
            sat = true;
            break;
          }
          if (v == 0) {
            ++open;
            last = lit;
          }
        }
        if (sat) continue;
        if (open == 0) {
          undo(trail);
          return false;
        }
        if (open == 1) {
          value_[std::abs(last) - 1] = last > 0 ? 1 : -1;
          trail.push_back(std::abs(last) - 1);
          changed = true;
        }
      }
    }
    int branch = -1;
    for (const auto& c : clauses_) {
      bool sat = false;
      int open = 0;
      for (int lit : c) {
        const int v = lit_value(lit);
        if (v > 0) sat = true;
        if (v == 0 && open == 0) open = lit;
      }
      if (!sat && open != 0) {
        branch = std::abs(open) - 1;
        break;
      }
    }
    if (branch < 0) return true;  // every clause satisfied
    for (int val : {1, -1}) {
      value_[branch] = val;
      if (search()) return true;
    }
    value_[branch] = 0;
    undo(trail);
    return false;
  }

  void undo(const std::vector<int>& trail) {
    for (int v : trail) value_[v] = 0;
  }

  std::vector<Variable> vars_;
  std::vector<std::vector<int>> clauses_;
  std::vector<int> value_;
  std::uint64_t nodes_ = 0;
  std::uint64_t max_nodes_;
};

// ------------------------------------------------------ bitmask clauses

struct Mask {
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;
  std::uint64_t key() const { return (std::uint64_t{neg} << 32) | pos; }
  bool empty() const { return (pos | neg) == 0; }
  friend bool operator==(Mask, Mask) = default;
};

struct Dense {
  std::vector<Variable> vars;
  std::vector<Mask> clauses;
};

Dense to_dense(const ClauseSet& F, std::size_t max_vars, const char* what) {
  Dense d;
  d.vars = F.vars();
  if (d.vars.size() > max_vars || d.vars.size() > 31)
    throw GuardRefusal(std::string(what) + ": n(F) = " + std::to_string(d.vars.size()) +
                       " exceeds the oracle bound " + std::to_string(std::min<std::size_t>(max_vars, 31)));
  for (const Clause& c : F) {
    Mask m;
    for (Literal x : c) {
      const auto i = static_cast<unsigned>(std::lower_bound(d.vars.begin(), d.vars.end(), x.var()) -
                                           d.vars.begin());
      (x.positive() ? m.pos : m.neg) |= 1u << i;
    }
    d.clauses.push_back(m);
  }
  return d;
}

bool falsified_by(Mask c, std::uint32_t total) { return (c.pos & total) == 0 && (c.neg & ~total) == 0; }

bool unsat_table(const std::vector<Mask>& clauses, unsigned n) {
  for (std::uint32_t a = 0; a < (1u << n); ++a) {
    bool some_false = false;
    for (Mask c : clauses)
      if (falsified_by(c, a)) {
        some_false = true;
        break;
      }
    if (!some_false) return false;
  }
  return true;
}

std::optional<Mask> resolve(Mask a, Mask b) {
  const std::uint32_t clash = (a.pos & b.neg) | (a.neg & b.pos);
  if (clash == 0 || (clash & (clash - 1)) != 0) return std::nullopt;
  Mask r{(a.pos | b.pos) & ~clash, (a.neg | b.neg) & ~clash};
  return r;
}

// Least k with ⊥ derivable by a tree of Horton-Strahler number <= k. Level k
// holds the clauses derivable at Horton-Strahler number <= k: it contains
// level k-1 and is closed under resolving one of its own clauses with a
// level k-1 clause.
unsigned min_strahler_refutation(const std::vector<Mask>& axioms, unsigned n, std::uint64_t& budget) {
  std::vector<Mask> prev = axioms;
  for (Mask m : prev)
    if (m.empty()) return 0;
  for (unsigned k = 1; k <= n + 1; ++k) {
    std::vector<Mask> cur = prev;
    std::unordered_set<std::uint64_t> seen;
    for (Mask m : cur) seen.insert(m.key());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = 0; j < prev.size(); ++j) {
        if (budget-- == 0) throw BudgetExhausted("tree-hardness oracle exceeded its node budget");
        auto r = resolve(cur[i], prev[j]);
        if (!r) continue;
        if (r->empty()) return k;
        if (seen.insert(r->key()).second) cur.push_back(*r);
      }
    }
    prev = std::move(cur);
  }
  throw PreconditionError("tree-hardness oracle called on a satisfiable clause-set");
}

}  // namespace

SatResult sat_complete(const ClauseSet& F, std::uint64_t max_nodes) {
  Backtracker bt(F, max_nodes);
  SatResult r;
  r.satisfiable = bt.run();
  if (r.satisfiable) r.model = bt.model();
  return r;
}

bool satisfiable(const ClauseSet& F) { return sat_complete(F).satisfiable; }

bool implies(const ClauseSet& F, const Clause& C) {
  std::vector<Clause> cls(F.begin(), F.end());
  for (Literal x : C) cls.push_back(Clause({~x}));
  return !satisfiable(ClauseSet(std::move(cls)));
}

ClauseSet prime_implicates_bruteforce(const ClauseSet& F, OracleBudget budget) {
  const Dense d = to_dense(F, budget.max_variables, "prime_implicates_bruteforce");
  const auto n = static_cast<unsigned>(d.vars.size());
  std::vector<std::uint32_t> models;
  for (std::uint32_t a = 0; a < (1u << n); ++a) {
    bool ok = true;
    for (Mask c : d.clauses)
      if (falsified_by(c, a)) {
        ok = false;
        break;
      }
    if (ok) models.push_back(a);
  }
  auto implied = [&](Mask c) {
    for (std::uint32_t a : models)
      if (falsified_by(c, a)) return false;
    return true;
  };
  std::vector<Clause> out;
  // Every clause over n variables: each variable absent, positive or negative.
  std::uint32_t total = 1;
  for (unsigned i = 0; i < n; ++i) total *= 3;
  for (std::uint32_t code = 0; code < total; ++code) {
    Mask c;
    std::uint32_t t = code;
    for (unsigned i = 0; i < n; ++i, t /= 3) {
      if (t % 3 == 1) c.pos |= 1u << i;
      if (t % 3 == 2) c.neg |= 1u << i;
    }
    if (!implied(c)) continue;
    bool minimal = true;
    for (unsigned i = 0; i < n && minimal; ++i) {
      const std::uint32_t bit = 1u << i;
      if (c.pos & bit) minimal = !implied(Mask{c.pos & ~bit, c.neg});
      else if (c.neg & bit) minimal = !implied(Mask{c.pos, c.neg & ~bit});
    }
    if (!minimal) continue;
    std::vector<Literal> lits;
    for (unsigned i = 0; i < n; ++i) {
      if (c.pos & (1u << i)) lits.emplace_back(d.vars[i], true);
      if (c.neg & (1u << i)) lits.emplace_back(d.vars[i], false);
    }
    out.emplace_back(std::move(lits));
  }
  return ClauseSet(std::move(out));
}

unsigned tree_hardness_unsat_bruteforce(const ClauseSet& F, OracleBudget budget) {
  const Dense d = to_dense(F, budget.max_variables, "tree_hardness_unsat_bruteforce");
  const auto n = static_cast<unsigned>(d.vars.size());
  if (!unsat_table(d.clauses, n))
    throw PreconditionError("tree_hardness_unsat_bruteforce: clause-set is satisfiable");
  std::uint64_t nodes = budget.max_nodes;
  return min_strahler_refutation(d.clauses, n, nodes);
}

unsigned hardness_bruteforce(const ClauseSet& F, OracleBudget budget) {
  const Dense d = to_dense(F, budget.max_variables, "hardness_bruteforce");
  if (F.is_top()) return 0;
  const auto n = static_cast<unsigned>(d.vars.size());
  std::uint32_t total = 1;
  for (unsigned i = 0; i < n; ++i) total *= 3;

  std::uint64_t nodes = budget.max_nodes;
  std::unordered_map<std::string, unsigned> cache;
  unsigned best = 0;
  for (std::uint32_t code = 0; code < total; ++code) {
    std::uint32_t t_mask = 0, f_mask = 0, t = code;
    for (unsigned i = 0; i < n; ++i, t /= 3) {
      if (t % 3 == 1) t_mask |= 1u << i;
      if (t % 3 == 2) f_mask |= 1u << i;
    }
    const std::uint32_t assigned = t_mask | f_mask;
    std::vector<Mask> residue;
    for (Mask c : d.clauses) {
      if ((c.pos & t_mask) || (c.neg & f_mask)) continue;
      residue.push_back(Mask{c.pos & ~assigned, c.neg & ~assigned});
    }
    std::sort(residue.begin(), residue.end(),
              [](Mask a, Mask b) { return a.key() < b.key(); });
    residue.erase(std::unique(residue.begin(), residue.end()), residue.end());
    std::string key(reinterpret_cast<const char*>(residue.data()), residue.size() * sizeof(Mask));
    auto it = cache.find(key);
    unsigned h = 0;
    if (it != cache.end()) {
      h = it->second;
    } else {
      h = unsat_table(residue, n) ? min_strahler_refutation(residue, n, nodes) : 0;
      cache.emplace(std::move(key), h);
    }
    best = std::max(best, h);
  }
  return best;
}

}  // namespace ucp::oracle
