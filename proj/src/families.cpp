#include "ucp/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "ucp/oracle.hpp"

namespace ucp {

std::string to_string(ClassTag t) {
  switch (t) {
    case ClassTag::Horn: return "Horn";
    case ClassTag::PureHorn: return "PureHorn";
    case ClassTag::RenamableHorn: return "RenamableHorn";
    case ClassTag::TwoCnf: return "2CNF";
    case ClassTag::Full: return "Full";
  }
  return "?";
}

bool Classification::has(ClassTag t) const {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

namespace {

std::size_t positives(const Clause& c) {
  return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](Literal x) { return x.positive(); }));
}

}  // namespace

bool is_horn(const ClauseSet& F) {
  return std::all_of(F.begin(), F.end(), [](const Clause& c) { return positives(c) <= 1; });
}

// Flip variable v iff v is true in a model of the 2-CNF holding every
// 2-subset {a, b} of every clause: a literal ends up positive exactly when
// it is false in that model, and {a, b} forbids two such literals.
bool is_renamable_horn(const ClauseSet& F) {
  std::vector<Clause> pairs;
  for (const Clause& c : F)
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) pairs.push_back(Clause({c[i], c[j]}));
  return oracle::satisfiable(ClauseSet(std::move(pairs)));
}

Classification classify(const ClauseSet& F) {
  Classification out;
  const std::size_t n = F.n();
  bool pure = true, full = true;
  for (const Clause& c : F) {
    out.max_length = std::max(out.max_length, c.size());
    pure = pure && positives(c) == 1;
    full = full && c.size() == n;
  }
  if (is_horn(F)) out.tags.push_back(ClassTag::Horn);
  if (pure) out.tags.push_back(ClassTag::PureHorn);
  if (is_renamable_horn(F)) out.tags.push_back(ClassTag::RenamableHorn);
  if (out.max_length <= 2) out.tags.push_back(ClassTag::TwoCnf);
  if (full) out.tags.push_back(ClassTag::Full);
  return out;
}

ClauseSet gen_full(unsigned n) {
  if (n > 20) throw PreconditionError("gen_full: n = " + std::to_string(n) + " is too large");
  std::vector<Clause> out;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    std::vector<Literal> lits;
    for (unsigned i = 0; i < n; ++i) lits.emplace_back(Variable{i + 1}, ((bits >> i) & 1u) != 0);
    out.emplace_back(std::move(lits));
  }
  return ClauseSet(std::move(out));
}

ClauseSet gen_full_minus_one(unsigned n) {
  if (n == 0) throw PreconditionError("gen_full_minus_one: n >= 1 required");
  std::vector<Literal> neg;
  for (unsigned i = 1; i <= n; ++i) neg.emplace_back(Variable{i}, false);
  return gen_full(n).without(Clause(std::move(neg)));
}

ClauseSet gen_pump(const ClauseSet& F, Variable v) {
  for (Variable w : F.vars())
    if (w == v) throw PreconditionError("gen_pump: variable " + std::to_string(v.id) + " occurs in F");
  std::vector<Clause> out;
  for (const Clause& c : F) {
    out.push_back(c.with(Literal(v, true)));
    out.push_back(c.with(Literal(v, false)));
  }
  return ClauseSet(std::move(out));
}

ClauseSet gen_horn_chain(unsigned n) {
  if (n == 0) throw PreconditionError("gen_horn_chain: n >= 1 required");
  std::vector<Clause> out;
  out.push_back(Clause{1});
  for (int i = 1; i < static_cast<int>(n); ++i) out.push_back(Clause{-i, i + 1});
  out.push_back(Clause{-static_cast<int>(n)});
  return ClauseSet(std::move(out));
}

ClauseSet gen_php(unsigned m, unsigned n) {
  if (m == 0 || n == 0) throw PreconditionError("gen_php: m, n >= 1 required");
  auto p = [n](unsigned i, unsigned j) { return static_cast<int>((i - 1) * n + j); };
  std::vector<Clause> out;
  for (unsigned i = 1; i <= m; ++i) {
    std::vector<int> c;
    for (unsigned j = 1; j <= n; ++j) c.push_back(p(i, j));
    out.push_back(Clause::from_dimacs(c));
  }
  for (unsigned j = 1; j <= n; ++j)
    for (unsigned i = 1; i <= m; ++i)
      for (unsigned i2 = i + 1; i2 <= m; ++i2) out.push_back(Clause{-p(i, j), -p(i2, j)});
  return ClauseSet(std::move(out));
}

namespace {

// Unbiased draw from [0, bound) by rejection; std::uniform_int_distribution
// is implementation-defined.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do r = rng();
  while (r >= limit);
  return r % bound;
}

}  // namespace

ClauseSet gen_random(unsigned n, unsigned k, std::size_t c, std::uint64_t seed) {
  if (k > n) throw PreconditionError("gen_random: k > n");
  // Number of distinct k-clauses: C(n,k) * 2^k.
  double available = std::ldexp(1.0, static_cast<int>(k));
  for (unsigned i = 0; i < k; ++i) available = available * (n - i) / (i + 1);
  if (static_cast<double>(c) > available)
    throw PreconditionError("gen_random: only " + std::to_string(static_cast<long long>(available)) +
                            " distinct clauses exist");
  std::mt19937_64 rng(seed);
  std::set<Clause> seen;
  std::vector<Clause> out;
  while (out.size() < c) {
    std::vector<Literal> lits;
    std::vector<std::uint32_t> used;
    while (lits.size() < k) {
      const auto v = static_cast<std::uint32_t>(draw(rng, n) + 1);
      if (std::find(used.begin(), used.end(), v) != used.end()) continue;
      used.push_back(v);
      lits.emplace_back(Variable{v}, draw(rng, 2) == 1);
    }
    Clause cl(std::move(lits));
    if (seen.insert(cl).second) out.push_back(std::move(cl));
  }
  return ClauseSet(std::move(out));
}

std::string FamilySpec::describe() const {
  switch (family) {
    case Family::Full: return "family=full n=" + std::to_string(n);
    case Family::FullMinusOne: return "family=full-minus-one n=" + std::to_string(n);
    case Family::Pump:
      return "family=pump base=(" + (base.empty() ? std::string("top") : base.front().describe()) + ")";
    case Family::HornChain: return "family=horn-chain n=" + std::to_string(n);
    case Family::Php: return "family=php m=" + std::to_string(m) + " n=" + std::to_string(n);
    case Family::RandomKCnf:
      return "family=random n=" + std::to_string(n) + " k=" + std::to_string(k) +
             " c=" + std::to_string(c) + " seed=" + std::to_string(seed);
  }
  return "family=?";
}

ClauseSet generate(const FamilySpec& params) {
  switch (params.family) {
    case Family::Full: return gen_full(params.n);
    case Family::FullMinusOne: return gen_full_minus_one(params.n);
    case Family::Pump: {
      const ClauseSet F = params.base.empty() ? ClauseSet::top() : generate(params.base.front());
      return gen_pump(F, Variable{F.max_var() + 1});
    }
    case Family::HornChain: return gen_horn_chain(params.n);
    case Family::Php: return gen_php(params.m, params.n);
    case Family::RandomKCnf: return gen_random(params.n, params.k, params.c, params.seed);
  }
  throw PreconditionError("unknown family");
}

}  // namespace ucp
