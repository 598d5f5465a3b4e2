// Class recognition and instance generators.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ucp/core.hpp"

namespace ucp {

enum class ClassTag { Horn, PureHorn, RenamableHorn, TwoCnf, Full };

std::string to_string(ClassTag t);

struct Classification {
  /// In enum order.
  std::vector<ClassTag> tags;
  /// Longest clause; 0 for ⊤ and {⊥}.
  std::size_t max_length = 0;
  bool has(ClassTag t) const;
};

/// Horn: at most one positive literal per clause. PureHorn: exactly one.
/// RenamableHorn: Horn after flipping the signs of some variables. Full:
/// every clause mentions every variable of F.
Classification classify(const ClauseSet& F);

bool is_horn(const ClauseSet& F);
bool is_renamable_horn(const ClauseSet& F);

/// A_n: all 2^n clauses over variables 1..n. A_0 = {⊥}.
ClauseSet gen_full(unsigned n);
/// A_n without the all-negative clause; n >= 1.
ClauseSet gen_full_minus_one(unsigned n);
/// {C ∪ {v}} ∪ {C ∪ {v̄}} over C ∈ F; v must not occur in F.
ClauseSet gen_pump(const ClauseSet& F, Variable v);
/// {x1}, {x̄i, x(i+1)} for i < n, {x̄n}; n >= 1.
ClauseSet gen_horn_chain(unsigned n);
/// m pigeons, n holes; pigeon i in hole j is variable (i-1)*n + j.
ClauseSet gen_php(unsigned m, unsigned n);
/// c distinct clauses of exactly k distinct variables from 1..n with random
/// signs. Duplicates are resampled. Deterministic for a given seed on every
/// platform.
ClauseSet gen_random(unsigned n, unsigned k, std::size_t c, std::uint64_t seed);

enum class Family { Full, FullMinusOne, Pump, HornChain, Php, RandomKCnf };

struct FamilySpec {
  Family family = Family::Full;
  unsigned n = 0;
  unsigned m = 0;
  unsigned k = 0;
  std::size_t c = 0;
  std::uint64_t seed = 0;
  /// Pump only: the base family (pumped once with variable max_var + 1).
  std::vector<FamilySpec> base;

  std::string describe() const;
};

ClauseSet generate(const FamilySpec& params);

}  // namespace ucp
