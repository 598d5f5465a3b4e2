#include "ucp/hardness.hpp"

#include <gtest/gtest.h>

#include <random>

#include "support/instances.hpp"
#include "ucp/oracle.hpp"
#include "ucp/resolution.hpp"

namespace ucp {
namespace {

// x = 1, y = 2, z = 3.
const ClauseSet kFull2{{1, 2}, {1, -2}, {-1, 2}, {-1, -2}};
const ClauseSet kFull2z{{3, 1, 2}, {3, 1, -2}, {3, -1, 2}, {3, -1, -2}};

TEST(HardnessUnsat, Examples) {
  EXPECT_EQ(hardness_unsat(ClauseSet{{1}, {-1}}), 1u);
  EXPECT_EQ(hardness_unsat(ClauseSet{{1}, {-1, 2}, {-2, 3}, {-3}}), 1u);
  EXPECT_EQ(hardness_unsat(kFull2), 2u);
  EXPECT_EQ(hardness_unsat(ClauseSet{{1, -2}, {-1, 2}, {2, -3}, {-2, 3}, {1, 2, 3}, {-1, -2, -3}}), 2u);
  EXPECT_EQ(hardness_unsat(ClauseSet::bottom()), 0u);
  EXPECT_THROW(hardness_unsat(ClauseSet{{1}}), PreconditionError);
}

TEST(Hardness, SatisfiableExamples) {
  EXPECT_EQ(hardness(ClauseSet::top()).value, 0u);
  EXPECT_EQ(hardness(ClauseSet{{1}}).value, 0u);

  const HardnessReport a = hardness(ClauseSet{{1, 2}, {1, -2}});
  EXPECT_EQ(a.value, 1u);
  EXPECT_EQ(a.witness, Clause{1});
  EXPECT_EQ(a.per_implicate_levels.at(Clause{1}), 1u);

  EXPECT_EQ(hardness(ClauseSet{{-1, 2}, {-2, 3}}).value, 1u);

  const HardnessReport b = hardness(kFull2z);
  EXPECT_EQ(b.value, 2u);
  EXPECT_EQ(b.witness, Clause{3});
}

TEST(Hardness, AgreesWithBruteforce) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const ClauseSet F = testing::random_clause_set(rng, 5, 9, 3);
    EXPECT_EQ(hardness(F).value, oracle::hardness_bruteforce(F)) << to_string(F);
  }
}

TEST(Hardness, TwoCnfFastPath) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 200; ++i) {
    const ClauseSet F = testing::random_clause_set(rng, 6, 10, 2);
    EXPECT_EQ(hardness_2cnf(F), hardness(F).value) << to_string(F);
  }
  EXPECT_THROW(hardness_2cnf(ClauseSet{{1, 2, 3}}), PreconditionError);
}

TEST(UcMember, Examples) {
  EXPECT_TRUE(uc_member(ClauseSet{{1, 2}, {-1, -2}}, 0));
  EXPECT_FALSE(uc_member(ClauseSet{{1}, {-1, -2}}, 0));
  EXPECT_FALSE(uc_member(ClauseSet{{2}, {-2}}, 0));
  EXPECT_TRUE(uc_member(ClauseSet{{1}}, 0));
  EXPECT_FALSE(uc_member(ClauseSet{{1}, {-1}}, 0));
  EXPECT_TRUE(uc_member(ClauseSet{{1}, {2}}, 0));
  EXPECT_FALSE(uc_member(ClauseSet{{1, -2}, {2}}, 0));
  EXPECT_TRUE(uc_member(kFull2, 2));
  EXPECT_FALSE(uc_member(kFull2, 1));
}

TEST(PHardness, Examples) {
  EXPECT_EQ(p_hardness(kFull2).value, 2u);
  EXPECT_EQ(p_hardness(ClauseSet::top()).value, 0u);
  // z is forced only by a level-3 probe, so phd = hd + 1 here.
  const PHardnessReport r = p_hardness(kFull2z);
  EXPECT_EQ(r.value, 3u);
  EXPECT_EQ(r.witness, PartialAssignment{});
  EXPECT_THROW(p_hardness(kFull2z, 2), GuardRefusal);
}

TEST(PHardness, SandwichedByHardness) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 150; ++i) {
    const ClauseSet F = testing::random_clause_set(rng, 5, 9, 3);
    const unsigned h = hardness(F).value;
    const PHardnessReport p = p_hardness(F);
    EXPECT_GE(p.value, h) << to_string(F);
    if (p.witness && p.value > 0) {
      const ClauseSet G = apply_assignment(*p.witness, F);
      EXPECT_NE(rk(p.value - 1, G), rk_inf(G));
      EXPECT_EQ(rk(p.value, G), rk_inf(G));
    }
    EXPECT_EQ(pc_member(F, p.value), true);
    if (p.value > 0) EXPECT_FALSE(pc_member(F, p.value - 1));
  }
}

TEST(WHardness, Examples) {
  EXPECT_EQ(w_hardness(ClauseSet::top()).value, 0u);
  EXPECT_EQ(w_hardness_unsat(ClauseSet{{1}, {-1}}), 1u);
  EXPECT_EQ(w_hardness_unsat(kFull2), 2u);
  EXPECT_EQ(w_hardness_unsat(ClauseSet::bottom()), 0u);
  EXPECT_EQ(w_hardness(ClauseSet{{1, 2}, {1, -2}}).value, 1u);
}

TEST(WHardness, BoundedByHardnessAndModesAgree) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 150; ++i) {
    const ClauseSet F = testing::random_clause_set(rng, 5, 8, 3);
    const unsigned h = hardness(F).value;
    const WHardnessReport w = w_hardness(F);
    EXPECT_LE(w.value, h) << to_string(F);
    if (h <= 1) EXPECT_EQ(w.value, h) << to_string(F);
    EXPECT_EQ(w_hardness(F, WhdMode::AllAssignments).value, w.value) << to_string(F);
  }
}

TEST(HardnessOracle, Behaviour) {
  const UnsatOracle U0 = UnsatOracle::empty_clause();
  const UnsatOracle U = UnsatOracle::unsatisfiable();
  EXPECT_EQ(hardness_oracle(kFull2, U0), 2u);
  EXPECT_EQ(hardness_oracle(kFull2, U), 0u);
  std::mt19937_64 rng(35);
  for (int i = 0; i < 100; ++i) {
    const ClauseSet F = testing::random_clause_set(rng, 5, 8, 3);
    EXPECT_EQ(hardness_oracle(F, U0), hardness(F).value) << to_string(F);
    EXPECT_EQ(hardness_oracle(F, U), 0u) << to_string(F);
  }
}

TEST(CanonMember, Examples) {
  EXPECT_TRUE(canon_member(kFull2, 2));
  EXPECT_FALSE(canon_member(kFull2, 1));
  EXPECT_TRUE(canon_member(ClauseSet{{1}}, 0));
}

TEST(CanonMember, ImpliesUc) {
  std::mt19937_64 rng(36);
  for (int i = 0; i < 150; ++i) {
    const ClauseSet F = testing::random_clause_set(rng, 4, 8, 3);
    for (unsigned k = 0; k <= 3; ++k)
      if (canon_member(F, k)) EXPECT_TRUE(uc_member(F, k)) << to_string(F) << " k=" << k;
  }
}

TEST(GradationWitness, StepsDownByOne) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 100; ++i) {
    const ClauseSet F = testing::random_clause_set(rng, 5, 12, 3);
    if (oracle::satisfiable(F)) continue;
    const unsigned h = hardness_unsat(F);
    for (unsigned k = 0; k <= h; ++k) {
      const PartialAssignment phi = hardness_gradation_witness(F, k);
      EXPECT_EQ(phi.size(), k);
      EXPECT_EQ(hardness_unsat(apply_assignment(phi, F)), h - k) << to_string(F);
    }
  }
  EXPECT_THROW(hardness_gradation_witness(ClauseSet{{1}, {-1}}, 2), PreconditionError);
}

}  // namespace
}  // namespace ucp
