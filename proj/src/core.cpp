#include "ucp/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace ucp {

Literal Literal::from_dimacs(int x) {
  if (x == 0) throw PreconditionError("literal 0 is not a literal");
  return Literal(Variable{static_cast<std::uint32_t>(std::abs(x))}, x > 0);
}

// ---------------------------------------------------------------- Clause

Clause::Clause(std::vector<Literal> lits) : lits_(std::move(lits)) {
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
  for (std::size_t i = 1; i < lits_.size(); ++i) {
    if (lits_[i - 1].var() == lits_[i].var()) {
      throw PreconditionError("clause contains a clashing pair on variable " +
                              std::to_string(lits_[i].var().id));
    }
  }
}

Clause::Clause(std::initializer_list<int> dimacs)
    : Clause(from_dimacs(std::vector<int>(dimacs))) {}

Clause Clause::from_dimacs(const std::vector<int>& dimacs) {
  std::vector<Literal> lits;
  lits.reserve(dimacs.size());
  for (int x : dimacs) lits.push_back(Literal::from_dimacs(x));
  return Clause(std::move(lits));
}

bool Clause::contains(Literal x) const {
  return std::binary_search(lits_.begin(), lits_.end(), x);
}

bool Clause::contains_var(Variable v) const {
  return contains(Literal(v, true)) || contains(Literal(v, false));
}

bool Clause::subset_of(const Clause& other) const {
  return std::includes(other.lits_.begin(), other.lits_.end(), lits_.begin(), lits_.end());
}

std::vector<Literal> Clause::clashes(const Clause& other) const {
  std::vector<Literal> out;
  auto i = lits_.begin();
  auto j = other.lits_.begin();
  while (i != lits_.end() && j != other.lits_.end()) {
    if (i->var() < j->var()) {
      ++i;
    } else if (j->var() < i->var()) {
      ++j;
    } else {
      if (*i != *j) out.push_back(*i);
      ++i;
      ++j;
    }
  }
  return out;
}

Clause Clause::without(Literal x) const {
  std::vector<Literal> out;
  out.reserve(lits_.size());
  for (Literal y : lits_)
    if (y != x) out.push_back(y);
  return Clause(std::move(out), Trusted{});
}

Clause Clause::with(Literal x) const {
  if (contains(~x)) throw PreconditionError("adding " + to_string(x) + " creates a clash");
  if (contains(x)) return *this;
  std::vector<Literal> out = lits_;
  out.insert(std::upper_bound(out.begin(), out.end(), x), x);
  return Clause(std::move(out), Trusted{});
}

std::vector<int> Clause::to_dimacs() const {
  std::vector<int> out;
  out.reserve(lits_.size());
  for (Literal x : lits_) out.push_back(x.to_dimacs());
  return out;
}

Clause union_unchecked(const Clause& a, const Clause& b) {
  std::vector<Literal> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.lits_.begin(), a.lits_.end(), b.lits_.begin(), b.lits_.end(),
                 std::back_inserter(out));
  return Clause(std::move(out), Clause::Trusted{});
}

// ------------------------------------------------------------- ClauseSet

ClauseSet::ClauseSet(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
  std::sort(clauses_.begin(), clauses_.end());
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
}

ClauseSet::ClauseSet(std::initializer_list<std::initializer_list<int>> dimacs) {
  std::vector<Clause> cls;
  for (const auto& c : dimacs) cls.emplace_back(c);
  *this = ClauseSet(std::move(cls));
}

ClauseSet ClauseSet::bottom() { return ClauseSet({Clause{}}, Trusted{}); }

std::vector<Variable> ClauseSet::vars() const {
  std::vector<Variable> out;
  for (const Clause& c : clauses_)
    for (Literal x : c) out.push_back(x.var());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t ClauseSet::n() const { return vars().size(); }

std::size_t ClauseSet::ell() const {
  std::size_t total = 0;
  for (const Clause& c : clauses_) total += c.size();
  return total;
}

std::vector<Literal> ClauseSet::lits() const {
  std::vector<Literal> out;
  for (Variable v : vars()) {
    out.emplace_back(v, false);
    out.emplace_back(v, true);
  }
  return out;
}

std::uint32_t ClauseSet::max_var() const {
  std::uint32_t m = 0;
  for (const Clause& c : clauses_)
    if (!c.empty()) m = std::max(m, c.literals().back().var().id);
  return m;
}

bool ClauseSet::contains(const Clause& c) const {
  return std::binary_search(clauses_.begin(), clauses_.end(), c);
}

bool ClauseSet::subsumes(const Clause& c) const {
  return std::any_of(clauses_.begin(), clauses_.end(),
                     [&](const Clause& d) { return d.subset_of(c); });
}

ClauseSet ClauseSet::with(const Clause& c) const {
  if (contains(c)) return *this;
  std::vector<Clause> out = clauses_;
  out.insert(std::upper_bound(out.begin(), out.end(), c), c);
  return ClauseSet(std::move(out), Trusted{});
}

ClauseSet ClauseSet::without(const Clause& c) const {
  std::vector<Clause> out;
  out.reserve(clauses_.size());
  for (const Clause& d : clauses_)
    if (d != c) out.push_back(d);
  return ClauseSet(std::move(out), Trusted{});
}

ClauseSet ClauseSet::united(const ClauseSet& other) const {
  std::vector<Clause> out;
  out.reserve(clauses_.size() + other.clauses_.size());
  std::set_union(clauses_.begin(), clauses_.end(), other.clauses_.begin(), other.clauses_.end(),
                 std::back_inserter(out));
  return ClauseSet(std::move(out), Trusted{});
}

CanonicalKey ClauseSet::key() const {
  CanonicalKey k;
  k.reserve(ell() + c());
  for (const Clause& c : clauses_) {
    for (Literal x : c) k.push_back(x.to_dimacs());
    k.push_back(0);
  }
  return k;
}

CanonicalKey canonical_form(const ClauseSet& F) { return F.key(); }

// ----------------------------------------------------- PartialAssignment

PartialAssignment::PartialAssignment(std::initializer_list<int> true_literals) {
  for (int x : true_literals) set_true(Literal::from_dimacs(x));
}

void PartialAssignment::set_true(Literal x) { bind(x.var(), x.positive()); }

void PartialAssignment::bind(Variable v, bool value) {
  auto [it, inserted] = map_.emplace(v.id, value);
  if (!inserted && it->second != value)
    throw PreconditionError("variable " + std::to_string(v.id) + " bound twice");
}

std::optional<bool> PartialAssignment::value(Variable v) const {
  auto it = map_.find(v.id);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

bool PartialAssignment::satisfies(Literal x) const {
  auto it = map_.find(x.var().id);
  return it != map_.end() && it->second == x.positive();
}

bool PartialAssignment::falsifies(Literal x) const {
  auto it = map_.find(x.var().id);
  return it != map_.end() && it->second != x.positive();
}

std::vector<Literal> PartialAssignment::true_literals() const {
  std::vector<Literal> out;
  out.reserve(map_.size());
  for (auto [v, b] : map_) out.emplace_back(Variable{v}, b);
  return out;
}

PartialAssignment PartialAssignment::merged(const PartialAssignment& other) const {
  PartialAssignment out = *this;
  for (auto [v, b] : other.map_) out.bind(Variable{v}, b);
  return out;
}

ClauseSet apply_assignment(const PartialAssignment& phi, const ClauseSet& F) {
  if (phi.empty()) return F;
  std::vector<Clause> out;
  out.reserve(F.c());
  for (const Clause& c : F) {
    bool satisfied = false;
    bool touched = false;
    for (Literal x : c) {
      if (phi.satisfies(x)) {
        satisfied = true;
        break;
      }
      if (phi.falsifies(x)) touched = true;
    }
    if (satisfied) continue;
    if (!touched) {
      out.push_back(c);
      continue;
    }
    std::vector<Literal> rest;
    for (Literal x : c)
      if (!phi.falsifies(x)) rest.push_back(x);
    out.push_back(Clause(std::move(rest), Clause::Trusted{}));
  }
  // Shrinking clauses can break the order and create duplicates.
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return ClauseSet(std::move(out), ClauseSet::Trusted{});
}

PartialAssignment assignment_from_clause(const Clause& C) {
  PartialAssignment phi;
  for (Literal x : C) phi.set_true(~x);
  return phi;
}

PartialAssignment assign_true(Literal x) {
  PartialAssignment phi;
  phi.set_true(x);
  return phi;
}

// -------------------------------------------------------- ForcedLiterals

ForcedLiterals ForcedLiterals::finite(std::vector<Literal> lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  return ForcedLiterals(std::move(lits));
}

bool ForcedLiterals::contains(Literal x) const {
  if (is_all()) return true;
  const auto& v = std::get<std::vector<Literal>>(value_);
  return std::binary_search(v.begin(), v.end(), x);
}

const std::vector<Literal>& ForcedLiterals::literals() const {
  if (is_all()) throw PreconditionError("forced literal set is LIT (unsatisfiable case)");
  return std::get<std::vector<Literal>>(value_);
}

// ------------------------------------------------------------ printing

std::string to_string(Literal x) { return std::to_string(x.to_dimacs()); }

std::string to_string(const Clause& c) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i].to_dimacs();
  os << '}';
  return os.str();
}

std::string to_string(const ClauseSet& F) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < F.c(); ++i) os << (i ? "," : "") << to_string(F[i]);
  os << '}';
  return os.str();
}

std::string to_string(const PartialAssignment& phi) {
  std::ostringstream os;
  os << '<';
  bool first = true;
  for (auto [v, b] : phi.bindings()) {
    os << (first ? "" : ",") << v << "->" << (b ? 1 : 0);
    first = false;
  }
  os << '>';
  return os.str();
}

}  // namespace ucp

std::size_t std::hash<ucp::Clause>::operator()(const ucp::Clause& c) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (ucp::Literal x : c) h = (h ^ x.code()) * 0x100000001b3ull;
  return h;
}

std::size_t std::hash<ucp::ClauseSet>::operator()(const ucp::ClauseSet& F) const noexcept {
  std::size_t h = 0x84222325cbf29ce4ull;
  for (const ucp::Clause& c : F) {
    h ^= std::hash<ucp::Clause>{}(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}
