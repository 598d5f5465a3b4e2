#include "ucp/bases.hpp"

#include <algorithm>
#include <numeric>

#include "ucp/hardness.hpp"
#include "ucp/oracle.hpp"
#include "ucp/resolution.hpp"

namespace ucp {

namespace {

bool implies_all(const ClauseSet& F, const ClauseSet& G) {
  return std::all_of(G.begin(), G.end(), [&](const Clause& c) {
    return F.contains(c) || oracle::implies(F, c);
  });
}

bool within(const ClauseSet& F, Level k) { return !k || hardness(F).value <= *k; }

BaseSearchResult finish(ClauseSet base, bool exact, std::vector<std::string> trace) {
  BaseSearchResult r;
  r.cardinality = base.c();
  r.size = base.ell();
  r.base = std::move(base);
  r.exact = exact;
  r.trace = std::move(trace);
  return r;
}

std::string level_name(Level k) { return k ? std::to_string(*k) : "inf"; }

}  // namespace

bool equivalent(const ClauseSet& F, const ClauseSet& G) {
  return implies_all(F, G) && implies_all(G, F);
}

bool is_k_base(const ClauseSet& F, Level k) {
  if (!within(F, k)) return false;
  auto acceptable = [&](const ClauseSet& G) { return equivalent(G, F) && within(G, k); };
  for (const Clause& C : F) {
    const ClauseSet rest = F.without(C);
    if (acceptable(rest)) return false;
    for (Literal x : C)
      if (acceptable(rest.with(C.without(x)))) return false;
  }
  return true;
}

BaseSearchResult min_base_from_primes(const ClauseSet& F, Level k, std::uint64_t budget) {
  if (prime_implicates(F) != F)
    throw PreconditionError("min_base_from_primes: input is not its own set of prime implicates");
  std::vector<std::string> trace;
  std::vector<Clause> core, optional;
  for (const Clause& C : F)
    (oracle::implies(F.without(C), C) ? optional : core).push_back(C);
  trace.push_back("core " + std::to_string(core.size()) + " irredundant clauses, " +
                  std::to_string(optional.size()) + " optional");

  const std::size_t m = optional.size();
  std::uint64_t evaluations = 0;
  for (std::size_t size = 0; size <= m; ++size) {
    // Index combinations in lexicographic order, which is also canonical
    // order of the resulting bases for a fixed size.
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      if (evaluations++ >= budget) {
        trace.push_back("budget of " + std::to_string(budget) + " candidates exhausted at size " +
                        std::to_string(size));
        return finish(F, false, std::move(trace));
      }
      std::vector<Clause> cls = core;
      for (std::size_t i : pick) cls.push_back(optional[i]);
      ClauseSet candidate(std::move(cls));
      if (implies_all(candidate, F) && within(candidate, k)) {
        trace.push_back("minimum found with " + std::to_string(size) + " optional clauses after " +
                        std::to_string(evaluations) + " candidates");
        return finish(std::move(candidate), true, std::move(trace));
      }
      // Next combination.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw Error("internal: F itself failed the base test at level " + level_name(k));
}

// ------------------------------------------------------ implication graph

ImplicationDigraph::ImplicationDigraph(const ClauseSet& F) {
  vertices_ = F.lits();
  for (const Clause& c : F) {
    if (c.size() > 2) throw PreconditionError("implication graph needs 2-CNF, got " + to_string(c));
    if (c.size() == 1) arcs_.emplace_back(~c[0], c[0]);
    if (c.size() == 2) {
      arcs_.emplace_back(~c[0], c[1]);
      arcs_.emplace_back(~c[1], c[0]);
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());

  const std::size_t n = vertices_.size();
  std::vector<std::vector<std::size_t>> out(n);
  for (auto [u, v] : arcs_) out[index(u)].push_back(index(v));
  reach_.assign(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack{s};
    reach_[s][s] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : out[u])
        if (!reach_[s][v]) {
          reach_[s][v] = true;
          stack.push_back(v);
        }
    }
  }
}

std::size_t ImplicationDigraph::index(Literal x) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x);
  if (it == vertices_.end() || *it != x) throw PreconditionError("literal not in graph: " + to_string(x));
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool ImplicationDigraph::reaches(Literal u, Literal v) const { return reach_[index(u)][index(v)]; }

std::vector<std::vector<Literal>> ImplicationDigraph::components() const {
  std::vector<std::vector<Literal>> comps;
  std::vector<bool> placed(vertices_.size(), false);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (placed[i]) continue;
    std::vector<Literal> comp;
    for (std::size_t j = i; j < vertices_.size(); ++j)
      if (reach_[i][j] && reach_[j][i]) {
        comp.push_back(vertices_[j]);
        placed[j] = true;
      }
    comps.push_back(std::move(comp));
  }
  return comps;
}

ClauseSet prime_implicates_2cnf(const ClauseSet& F) {
  if (F.has_empty_clause()) return ClauseSet::bottom();
  const ImplicationDigraph g(F);
  const auto& lits = g.vertices();
  auto forced = [&](Literal x) { return g.reaches(~x, x); };
  std::vector<Clause> out;
  for (Literal x : lits) {
    if (forced(x) && forced(~x)) return ClauseSet::bottom();
    if (forced(x)) out.push_back(Clause({x}));
  }
  for (Literal u : lits) {
    if (forced(~u)) continue;
    for (Literal v : lits) {
      if (u.var() == v.var() || forced(v) || !g.reaches(u, v)) continue;
      out.push_back(Clause({~u, v}));
    }
  }
  return ClauseSet(std::move(out));
}

BaseSearchResult min_base_2cnf(const ClauseSet& F, Level k) {
  for (const Clause& c : F)
    if (c.size() > 2) throw PreconditionError("min_base_2cnf: clause longer than 2: " + to_string(c));
  std::vector<std::string> trace;
  if (!oracle::satisfiable(F)) {
    trace.push_back("unsatisfiable: base {⊥}");
    return finish(ClauseSet::bottom(), true, std::move(trace));
  }
  if (F.is_top()) {
    trace.push_back("empty clause-set");
    return finish(ClauseSet::top(), true, std::move(trace));
  }

  const ImplicationDigraph whole(F);
  std::vector<Clause> units;
  PartialAssignment phi;
  for (Literal x : whole.vertices())
    if (whole.reaches(~x, x)) {
      units.push_back(Clause({x}));
      phi.set_true(x);
    }
  const ClauseSet residue = apply_assignment(phi, F);
  trace.push_back("forced literals split off: " + std::to_string(units.size()));

  if (k && *k == 0) {
    trace.push_back("level 0: all prime implicates");
    return finish(ClauseSet(units).united(prime_implicates_2cnf(residue)), true, std::move(trace));
  }
  if (residue.is_top()) return finish(ClauseSet(std::move(units)), true, std::move(trace));

  // Residue has no forced literals: every prime implicate is binary, and a
  // minimum equivalent subset of prc0 is a minimum equivalent graph of the
  // closure that respects the skew pairing u -> v ~ v̄ -> ū.
  const ImplicationDigraph g(residue);
  const auto comps = g.components();
  std::vector<std::size_t> comp_of(2 * (residue.max_var() + 1), 0);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (Literal x : comps[i]) comp_of[x.code()] = i;
  auto mirror = [&](std::size_t c) { return comp_of[(~comps[c].front()).code()]; };

  std::vector<Clause> chosen = units;
  std::size_t cycle_clauses = 0, bridge_clauses = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto& S = comps[c];
    // One cycle per pair {S, S̄}; its mirror image comes with the same clauses.
    if (S.size() < 2 || c > mirror(c)) continue;
    for (std::size_t i = 0; i < S.size(); ++i) {
      chosen.push_back(Clause({~S[i], S[(i + 1) % S.size()]}));
      ++cycle_clauses;
    }
  }
  auto creach = [&](std::size_t a, std::size_t b) { return g.reaches(comps[a].front(), comps[b].front()); };
  for (std::size_t a = 0; a < comps.size(); ++a) {
    for (std::size_t b = 0; b < comps.size(); ++b) {
      if (a == b || !creach(a, b)) continue;
      bool covered = false;
      for (std::size_t w = 0; w < comps.size() && !covered; ++w)
        covered = w != a && w != b && creach(a, w) && creach(w, b);
      if (covered) continue;
      // Arc a -> b pairs with mirror(b) -> mirror(a); keep the smaller of the two.
      if (std::pair{mirror(b), mirror(a)} < std::pair{a, b}) continue;
      chosen.push_back(Clause({~comps[a].front(), comps[b].front()}));
      ++bridge_clauses;
    }
  }
  trace.push_back("components: " + std::to_string(comps.size()) + ", cycle clauses " +
                  std::to_string(cycle_clauses) + ", transitive-reduction clauses " +
                  std::to_string(bridge_clauses));
  return finish(ClauseSet(std::move(chosen)), true, std::move(trace));
}

}  // namespace ucp
