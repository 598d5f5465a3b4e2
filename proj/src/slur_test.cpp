#include "ucp/slur.hpp"

#include <gtest/gtest.h>

#include <random>

#include "support/instances.hpp"
#include "ucp/families.hpp"
#include "ucp/hardness.hpp"
#include "ucp/oracle.hpp"
#include "ucp/reductions.hpp"

namespace ucp {
namespace {

// x = 1, y = 2; padding variables start at 3.
const ClauseSet kFull2{{1, 2}, {1, -2}, {-1, 2}, {-1, -2}};

ClauseSet padded(const ClauseSet& F, std::vector<int> extra) {
  std::vector<Clause> out;
  for (const Clause& c : F) {
    std::vector<int> lits = c.to_dimacs();
    lits.insert(lits.end(), extra.begin(), extra.end());
    out.push_back(Clause::from_dimacs(lits));
  }
  return ClauseSet(out);
}

constexpr TransitionConfig slur_k(unsigned k) { return {k, SlurVariant::SlurK}; }
constexpr TransitionConfig alt_k(unsigned k) { return {k, SlurVariant::AltSlurStarK}; }

TEST(SlurSuccessors, Examples) {
  const auto top_succ = slur_successors(ClauseSet{{-1, 2}, {-2, 3}}, slur_k(1));
  EXPECT_TRUE(std::find(top_succ.begin(), top_succ.end(), ClauseSet::top()) != top_succ.end());
  EXPECT_TRUE(slur_successors(kFull2, slur_k(1)).empty());
  EXPECT_TRUE(slur_successors(ClauseSet::top(), slur_k(1)).empty());
  EXPECT_TRUE(slur_successors(ClauseSet::bottom(), slur_k(1)).empty());
  EXPECT_EQ(slur_successors(ClauseSet{{1, 2}, {1, -2}}, slur_k(1)),
            (std::vector<ClauseSet>{ClauseSet::top()}));
}

TEST(SlurTerminalSet, Examples) {
  using V = std::vector<ClauseSet>;
  EXPECT_EQ(slur_terminal_set(ClauseSet::bottom(), slur_k(1)), V{ClauseSet::bottom()});
  EXPECT_EQ(slur_terminal_set(ClauseSet::top(), slur_k(1)), V{ClauseSet::top()});
  EXPECT_EQ(slur_terminal_set(ClauseSet{{1, -2, 3}}, slur_k(1)), V{ClauseSet::top()});
  EXPECT_EQ(slur_terminal_set(ClauseSet{{1, 2}, {1, -2}}, slur_k(1)), V{ClauseSet::top()});
  EXPECT_EQ(slur_terminal_set(ClauseSet{{-1, 2}, {-2, 3}}, slur_k(1)), V{ClauseSet::top()});
  EXPECT_EQ(slur_terminal_set(kFull2, slur_k(1)), V{kFull2});

  const V t = slur_terminal_set(padded(kFull2, {3}), slur_k(1));
  EXPECT_EQ(t.size(), 2u);
  EXPECT_TRUE(std::find(t.begin(), t.end(), ClauseSet::top()) != t.end());
  EXPECT_TRUE(std::find(t.begin(), t.end(), kFull2) != t.end());
}

TEST(SlurMember, Examples) {
  EXPECT_FALSE(slur_member(kFull2, slur_k(1)));
  EXPECT_TRUE(slur_member(kFull2, slur_k(2)));
  EXPECT_TRUE(slur_member(kFull2, alt_k(1)));

  const ClauseSet F2 = padded(kFull2, {3, 4});
  EXPECT_FALSE(slur_member(F2, slur_k(1)));
  EXPECT_TRUE(slur_member(F2, slur_k(2)));
  // Padding with k variables escapes Altslur*_k but not Altslur*_{k+1}.
  EXPECT_FALSE(slur_member(F2, alt_k(2)));
  EXPECT_TRUE(slur_member(F2, alt_k(3)));
  const ClauseSet F1 = padded(kFull2, {3});
  EXPECT_FALSE(slur_member(F1, alt_k(1)));
  EXPECT_TRUE(slur_member(F1, alt_k(2)));
}

TEST(SlurMember, Guard) {
  EXPECT_THROW(slur_member(gen_full(3), slur_k(1), 2), GuardRefusal);
  EXPECT_THROW(slur_successors(kFull2, alt_k(0)), PreconditionError);
}

TEST(KDecisions, Examples) {
  // k = 0 is plain propagation.
  const auto zero = k_decision_assignments(ClauseSet{{1}, {-1, 2}, {3, 4}}, 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero.front().result, (ClauseSet{{3, 4}}));

  for (const DecisionOutcome& d : k_decision_assignments(ClauseSet{{1, 2}}, 1))
    EXPECT_EQ(apply_assignment(d.phi, ClauseSet{{1, 2}}), d.result);

  auto reaches_core = [](const ClauseSet& F, unsigned k) {
    bool hit = false;
    for (const DecisionOutcome& d : k_decision_assignments(F, k)) hit |= d.result == kFull2;
    return hit;
  };
  EXPECT_TRUE(reaches_core(padded(kFull2, {3}), 1));
  EXPECT_FALSE(reaches_core(padded(kFull2, {3}), 2));
  EXPECT_TRUE(reaches_core(padded(kFull2, {3, 4}), 2));
}

TEST(KDecisions, PhiReproducesResult) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    const ClauseSet F = testing::random_clause_set(rng, 5, 8, 3);
    for (unsigned k = 0; k <= 2; ++k)
      for (const DecisionOutcome& d : k_decision_assignments(F, k))
        EXPECT_EQ(apply_assignment(d.phi, F), d.result) << to_string(F);
  }
}

TEST(SlurProperties, TopReachableIffSatisfiable) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 150; ++i) {
    const ClauseSet F = testing::random_clause_set(rng, 5, 10, 3);
    const unsigned k = static_cast<unsigned>(testing::uniform(rng, 1, 2));
    const auto terminals = slur_terminal_set(F, slur_k(k));
    const bool has_top = std::find(terminals.begin(), terminals.end(), ClauseSet::top()) != terminals.end();
    EXPECT_EQ(has_top, oracle::satisfiable(F)) << to_string(F);
    for (const ClauseSet& T : terminals)
      if (!T.is_top()) EXPECT_FALSE(oracle::satisfiable(T));
  }
}

TEST(SlurProperties, AssignmentsReachReducedResult) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    const ClauseSet F = testing::random_clause_set(rng, 5, 8, 3);
    const unsigned k = static_cast<unsigned>(testing::uniform(rng, 1, 2));
    PartialAssignment phi;
    for (Variable v : F.vars())
      if (testing::uniform(rng, 0, 2) == 0) phi.bind(v, testing::uniform(rng, 0, 1));
    const ClauseSet target = rk(k, apply_assignment(phi, F));
    if (target.is_bottom()) continue;
    const SlurExploration ex = slur_explore(F, slur_k(k));
    EXPECT_TRUE(std::find(ex.states.begin(), ex.states.end(), target) != ex.states.end())
        << to_string(F) << " phi=" << to_string(phi);
  }
}

TEST(SlurProperties, SlurEqualsUc) {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 150; ++i) {
    const ClauseSet F = testing::random_clause_set(rng, 4, 9, 3);
    for (unsigned k = 1; k <= 2; ++k)
      EXPECT_EQ(slur_member(F, slur_k(k)), uc_member(F, k)) << to_string(F) << " k=" << k;
  }
}

TEST(SlurProperties, FullSetsSeparate) {
  for (unsigned k = 1; k <= 2; ++k) {
    EXPECT_TRUE(slur_member(gen_full(k + 1), alt_k(k)));
    EXPECT_FALSE(slur_member(gen_full(k + 1), slur_k(k)));
  }
}

}  // namespace
}  // namespace ucp
