#include "ucp/hardness.hpp"

#include <algorithm>
#include <unordered_map>

#include "ucp/oracle.hpp"
#include "ucp/resolution.hpp"

namespace ucp {

namespace {

// Least k with r_k(G) = {⊥}, or nullopt when none up to the trivial bound.
std::optional<unsigned> refutation_level(const ClauseSet& G) {
  const std::size_t n = G.n();
  for (unsigned k = 0; k <= n + 1; ++k)
    if (rk(k, G).is_bottom()) return k;
  return std::nullopt;
}

std::optional<unsigned> refutation_level(const ClauseSet& G, const UnsatOracle& U) {
  const std::size_t n = G.n();
  for (unsigned k = 0; k <= n + 1; ++k)
    if (rk_oracle(k, G, U).is_bottom()) return k;
  return std::nullopt;
}

std::optional<unsigned> k_resolution_level(const ClauseSet& G) {
  std::size_t width = 0;
  for (const Clause& c : G) width = std::max(width, c.size());
  // At k = width every resolution step qualifies.
  for (unsigned k = 0; k <= width; ++k)
    if (k_resolution_closure(G, k, true).has_empty_clause()) return k;
  return std::nullopt;
}

void guard(const ClauseSet& F, std::size_t max_vars, const char* what) {
  if (F.n() > max_vars)
    throw GuardRefusal(std::string(what) + ": n(F) = " + std::to_string(F.n()) +
                       " exceeds the enumeration bound " + std::to_string(max_vars));
}

// Calls visit(φ) for every partial assignment over vars, 3^n of them.
template <class Visit>
void for_each_assignment(const std::vector<Variable>& vars, Visit&& visit) {
  std::vector<int> digit(vars.size(), 0);
  while (true) {
    PartialAssignment phi;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (digit[i] != 0) phi.bind(vars[i], digit[i] == 2);
    visit(phi);
    std::size_t i = 0;
    while (i < vars.size() && digit[i] == 2) digit[i++] = 0;
    if (i == vars.size()) return;
    ++digit[i];
  }
}

}  // namespace

unsigned hardness_unsat(const ClauseSet& F) {
  if (auto k = refutation_level(F)) return *k;
  throw PreconditionError("hardness_unsat: clause-set is satisfiable");
}

HardnessReport hardness(const ClauseSet& F) {
  HardnessReport report;
  for (const Clause& C : prime_implicates(F)) {
    auto level = refutation_level(apply_assignment(assignment_from_clause(C), F));
    if (!level) throw Error("internal: prime implicate " + to_string(C) + " not refuted");
    report.per_implicate_levels.emplace(C, *level);
    if (!report.witness || *level > report.value) {
      report.value = *level;
      report.witness = C;
    }
  }
  return report;
}

unsigned hardness_2cnf(const ClauseSet& F) {
  for (const Clause& c : F)
    if (c.size() > 2) throw PreconditionError("hardness_2cnf: clause longer than 2: " + to_string(c));
  if (oracle::satisfiable(F)) return is_stable_modulo_subsumption(F) ? 0 : 1;
  if (F.has_empty_clause()) return 0;
  return rk(1, F).is_bottom() ? 1 : 2;
}

bool uc_member(const ClauseSet& F, unsigned k) { return hardness(F).value <= k; }

PHardnessReport p_hardness(const ClauseSet& F, std::size_t max_vars) {
  guard(F, max_vars, "p_hardness");
  PHardnessReport report;
  std::unordered_map<ClauseSet, unsigned> level_of;
  for_each_assignment(F.vars(), [&](const PartialAssignment& phi) {
    const ClauseSet G = apply_assignment(phi, F);
    auto it = level_of.find(G);
    if (it == level_of.end()) {
      const ClauseSet target = rk_inf(G);
      unsigned k = 0;
      while (rk(k, G) != target) ++k;
      it = level_of.emplace(G, k).first;
    }
    const unsigned k = it->second;
    if (k == 0) return;
    if (k > report.value || (k == report.value && phi < *report.witness)) {
      report.value = k;
      report.witness = phi;
    }
  });
  return report;
}

bool pc_member(const ClauseSet& F, unsigned k, std::size_t max_vars) {
  return p_hardness(F, max_vars).value <= k;
}

unsigned w_hardness_unsat(const ClauseSet& F) {
  if (auto k = k_resolution_level(F)) return *k;
  throw PreconditionError("w_hardness_unsat: clause-set is satisfiable");
}

WHardnessReport w_hardness(const ClauseSet& F, WhdMode mode, std::size_t max_vars) {
  WHardnessReport report;
  if (mode == WhdMode::PrimeImplicates) {
    for (const Clause& C : prime_implicates(F)) {
      const unsigned k = w_hardness_unsat(apply_assignment(assignment_from_clause(C), F));
      if (!report.witness || k > report.value) {
        report.value = k;
        report.witness = C;
      }
    }
    return report;
  }
  guard(F, max_vars, "w_hardness");
  std::unordered_map<ClauseSet, unsigned> level_of;
  for_each_assignment(F.vars(), [&](const PartialAssignment& phi) {
    const ClauseSet G = apply_assignment(phi, F);
    auto it = level_of.find(G);
    if (it == level_of.end()) {
      auto k = k_resolution_level(G);
      it = level_of.emplace(G, k ? *k + 1 : 0).first;  // 0 marks satisfiable
    }
    if (it->second == 0) return;
    const unsigned k = it->second - 1;
    if (!report.witness_assignment || k > report.value ||
        (k == report.value && phi < *report.witness_assignment)) {
      report.value = k;
      report.witness_assignment = phi;
    }
  });
  return report;
}

unsigned hardness_oracle(const ClauseSet& F, const UnsatOracle& U, std::size_t max_vars) {
  const bool sat = oracle::satisfiable(F);
  if (sat) guard(F, max_vars, "hardness_oracle");
  unsigned best = 0;
  for (const Clause& C : prime_implicates(F)) {
    auto level = refutation_level(apply_assignment(assignment_from_clause(C), F), U);
    if (!level) throw Error("internal: oracle failed to refute prime implicate " + to_string(C));
    best = std::max(best, *level);
  }
  return best;
}

bool canon_member(const ClauseSet& F, unsigned k, bool strict) {
  const ClauseSet primes = prime_implicates(F);
  const ClauseSet H = height_bounded_closure(F, k);
  return std::all_of(primes.begin(), primes.end(), [&](const Clause& C) {
    return strict ? H.contains(C) : H.subsumes(C);
  });
}

PartialAssignment hardness_gradation_witness(const ClauseSet& F, unsigned k) {
  if (oracle::satisfiable(F))
    throw PreconditionError("hardness_gradation_witness: clause-set is satisfiable");
  unsigned h = hardness_unsat(F);
  if (k > h)
    throw PreconditionError("hardness_gradation_witness: k = " + std::to_string(k) +
                            " exceeds hd(F) = " + std::to_string(h));
  PartialAssignment phi;
  ClauseSet G = F;
  for (unsigned step = 0; step < k; ++step) {
    bool found = false;
    for (Literal x : G.lits()) {
      const ClauseSet next = apply_assignment(assign_true(x), G);
      if (hardness_unsat(next) == h - 1) {
        phi.set_true(x);
        G = next;
        --h;
        found = true;
        break;
      }
    }
    if (!found) throw Error("internal: no literal lowers hardness of " + to_string(G));
  }
  return phi;
}

}  // namespace ucp
