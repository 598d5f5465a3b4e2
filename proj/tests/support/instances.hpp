// Instance sources shared by the unit, integration and acceptance tests.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ucp/core.hpp"

namespace ucp::testing {

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random clause over variables 1..n with length in [1, max_len].
inline Clause random_clause(std::mt19937_64& rng, unsigned n, unsigned max_len) {
  const int len = uniform(rng, 1, static_cast<int>(std::min(n, max_len)));
  std::vector<int> vars(n);
  std::iota(vars.begin(), vars.end(), 1);
  std::shuffle(vars.begin(), vars.end(), rng);
  std::vector<int> lits;
  for (int i = 0; i < len; ++i) lits.push_back(uniform(rng, 0, 1) ? vars[i] : -vars[i]);
  return Clause::from_dimacs(lits);
}

/// Up to max_clauses random clauses; n(F) may end up below n.
inline ClauseSet random_clause_set(std::mt19937_64& rng, unsigned n, unsigned max_clauses,
                                   unsigned max_len) {
  const int c = uniform(rng, 1, static_cast<int>(max_clauses));
  std::vector<Clause> cls;
  for (int i = 0; i < c; ++i) cls.push_back(random_clause(rng, n, max_len));
  return ClauseSet(std::move(cls));
}

/// Random Horn clause-set: each clause keeps at most one positive literal.
inline ClauseSet random_horn(std::mt19937_64& rng, unsigned n, unsigned max_clauses, unsigned max_len) {
  std::vector<Clause> cls;
  const int c = uniform(rng, 1, static_cast<int>(max_clauses));
  for (int i = 0; i < c; ++i) {
    const Clause raw = random_clause(rng, n, max_len);
    std::vector<int> lits;
    const int keep = uniform(rng, -1, static_cast<int>(raw.size()) - 1);  // -1: no positive literal
    for (std::size_t j = 0; j < raw.size(); ++j) {
      const int v = static_cast<int>(raw[j].var().id);
      lits.push_back(static_cast<int>(j) == keep ? v : -v);
    }
    cls.push_back(Clause::from_dimacs(lits));
  }
  return ClauseSet(std::move(cls));
}

/// Renames variable v to perm[v-1] + 1 and flips it when flip bit v-1 is set.
inline ClauseSet rename(const ClauseSet& F, const std::vector<int>& perm, std::uint32_t flips) {
  std::vector<Clause> out;
  for (const Clause& c : F) {
    std::vector<int> lits;
    for (Literal x : c) {
      const std::uint32_t v = x.var().id;
      const bool pos = x.positive() != (((flips >> (v - 1)) & 1u) != 0);
      const int w = perm[v - 1] + 1;
      lits.push_back(pos ? w : -w);
    }
    out.push_back(Clause::from_dimacs(lits));
  }
  return ClauseSet(std::move(out));
}

/// Every clause over variables 1..n, ⊥ included, canonical order.
inline std::vector<Clause> all_clauses(unsigned n) {
  std::vector<Clause> out;
  std::uint32_t total = 1;
  for (unsigned i = 0; i < n; ++i) total *= 3;
  for (std::uint32_t code = 0; code < total; ++code) {
    std::vector<int> lits;
    std::uint32_t t = code;
    for (unsigned i = 1; i <= n; ++i, t /= 3) {
      if (t % 3 == 1) lits.push_back(static_cast<int>(i));
      if (t % 3 == 2) lits.push_back(-static_cast<int>(i));
    }
    out.push_back(Clause::from_dimacs(lits));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// One representative per orbit (under variable permutation and sign
/// flips) of the clause-sets made of at most max_clauses clauses over
/// variables 1..3. Every such clause-set is the image of exactly one
/// representative, so invariant properties checked on the representatives
/// hold for the whole family.
inline std::vector<ClauseSet> exhaustive_n3(unsigned max_clauses = 6) {
  const std::vector<Clause> clauses = all_clauses(3);
  const std::size_t m = clauses.size();  // 27
  // Clause-index image under each of the 48 symmetries.
  std::vector<std::vector<int>> images;
  std::array<int, 3> perm{0, 1, 2};
  do {
    for (std::uint32_t flips = 0; flips < 8; ++flips) {
      std::vector<int> img(m);
      for (std::size_t i = 0; i < m; ++i) {
        const ClauseSet one = rename(ClauseSet({clauses[i]}), {perm[0], perm[1], perm[2]}, flips);
        img[i] = static_cast<int>(std::lower_bound(clauses.begin(), clauses.end(), one[0]) - clauses.begin());
      }
      images.push_back(std::move(img));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<ClauseSet> reps;
  // Enumerate index subsets as increasing sequences by depth-first search.
  auto visit = [&](std::uint32_t mask) {
    std::uint32_t least = mask;
    for (const auto& img : images) {
      std::uint32_t t = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (1u << i)) t |= 1u << img[i];
      least = std::min(least, t);
      if (least < mask) return;
    }
    std::vector<Clause> cls;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) cls.push_back(clauses[i]);
    reps.emplace_back(std::move(cls));
  };
  auto rec = [&](auto&& self, std::size_t from, unsigned depth, std::uint32_t mask) -> void {
    visit(mask);
    if (depth == max_clauses) return;
    for (std::size_t i = from; i < m; ++i) self(self, i + 1, depth + 1, mask | (1u << i));
  };
  rec(rec, 0, 0, 0);
  return reps;
}

}  // namespace ucp::testing
