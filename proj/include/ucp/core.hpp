// Clause-set data model: literals, clauses, clause-sets, partial assignments.
//
// All values are immutable once built and kept in canonical order, so
// extensional equality is plain structural equality.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ucp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (DIMACS, clause strings).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A size guard refused the computation. Never a silent truncation.
class GuardRefusal : public Error {
 public:
  using Error::Error;
};

/// A search ran out of its node budget before reaching a verdict.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

class PartialAssignment;
class ClauseSet;

struct Variable {
  std::uint32_t id = 0;
  friend auto operator<=>(Variable, Variable) = default;
};

/// Literal over a positive variable id. Ordered by variable, negative first.
class Literal {
 public:
  constexpr Literal() = default;
  constexpr Literal(Variable v, bool positive) : code_(2 * v.id + (positive ? 1u : 0u)) {
    if (v.id == 0) throw PreconditionError("variable ids start at 1");
  }
  /// DIMACS convention: +v / -v, v >= 1.
  static Literal from_dimacs(int x);

  constexpr Variable var() const { return Variable{code_ >> 1}; }
  constexpr bool positive() const { return (code_ & 1u) != 0; }
  constexpr Literal operator~() const { return Literal(code_ ^ 1u); }
  constexpr std::uint32_t code() const { return code_; }
  int to_dimacs() const {
    const int v = static_cast<int>(var().id);
    return positive() ? v : -v;
  }

  friend constexpr auto operator<=>(Literal, Literal) = default;

 private:
  constexpr explicit Literal(std::uint32_t code) : code_(code) {}
  std::uint32_t code_ = 0;
};

/// Clash-free set of literals, stored sorted. The empty clause is ⊥.
class Clause {
 public:
  Clause() = default;
  /// Sorts and deduplicates; throws PreconditionError on a clashing pair.
  explicit Clause(std::vector<Literal> lits);
  Clause(std::initializer_list<int> dimacs);
  static Clause from_dimacs(const std::vector<int>& dimacs);

  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }
  const std::vector<Literal>& literals() const { return lits_; }
  Literal operator[](std::size_t i) const { return lits_[i]; }

  bool contains(Literal x) const;
  bool contains_var(Variable v) const;
  bool subset_of(const Clause& other) const;
  /// Literals x of this clause with ~x in other.
  std::vector<Literal> clashes(const Clause& other) const;

  Clause without(Literal x) const;
  /// Adds x; throws if ~x is present.
  Clause with(Literal x) const;
  std::vector<int> to_dimacs() const;

  friend bool operator==(const Clause&, const Clause&) = default;
  friend auto operator<=>(const Clause& a, const Clause& b) { return a.lits_ <=> b.lits_; }

 private:
  struct Trusted {};
  Clause(std::vector<Literal> sorted, Trusted) : lits_(std::move(sorted)) {}
  friend class ClauseSet;
  friend Clause union_unchecked(const Clause&, const Clause&);
  friend ClauseSet apply_assignment(const PartialAssignment&, const ClauseSet&);
  std::vector<Literal> lits_;
};

/// Union of two clauses already known not to clash.
Clause union_unchecked(const Clause& a, const Clause& b);

using CanonicalKey = std::vector<int>;

/// Finite set of clauses in canonical order. ⊤ is the empty set, {⊥} holds
/// only the empty clause.
class ClauseSet {
 public:
  ClauseSet() = default;
  explicit ClauseSet(std::vector<Clause> clauses);
  ClauseSet(std::initializer_list<std::initializer_list<int>> dimacs);

  static ClauseSet top() { return {}; }
  static ClauseSet bottom();

  std::size_t c() const { return clauses_.size(); }
  std::size_t n() const;
  std::size_t ell() const;
  std::vector<Variable> vars() const;
  /// lit(F): both polarities of every variable, canonical order.
  std::vector<Literal> lits() const;
  std::uint32_t max_var() const;

  bool is_top() const { return clauses_.empty(); }
  /// F == {⊥}.
  bool is_bottom() const { return clauses_.size() == 1 && clauses_.front().empty(); }
  bool has_empty_clause() const { return !clauses_.empty() && clauses_.front().empty(); }
  bool contains(const Clause& c) const;
  /// Some clause of F is a subset of c.
  bool subsumes(const Clause& c) const;

  auto begin() const { return clauses_.begin(); }
  auto end() const { return clauses_.end(); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& operator[](std::size_t i) const { return clauses_[i]; }

  ClauseSet with(const Clause& c) const;
  ClauseSet without(const Clause& c) const;
  ClauseSet united(const ClauseSet& other) const;

  CanonicalKey key() const;

  friend bool operator==(const ClauseSet&, const ClauseSet&) = default;
  friend auto operator<=>(const ClauseSet& a, const ClauseSet& b) {
    return a.clauses_ <=> b.clauses_;
  }

 private:
  struct Trusted {};
  ClauseSet(std::vector<Clause> sorted, Trusted) : clauses_(std::move(sorted)) {}
  friend ClauseSet apply_assignment(const PartialAssignment&, const ClauseSet&);
  std::vector<Clause> clauses_;
};

/// Finite map variable -> bit.
class PartialAssignment {
 public:
  PartialAssignment() = default;
  PartialAssignment(std::initializer_list<int> true_literals);

  /// Binds var(x) so that x becomes true. Throws on an inconsistent rebinding.
  void set_true(Literal x);
  void bind(Variable v, bool value);
  std::optional<bool> value(Variable v) const;
  bool satisfies(Literal x) const;
  bool falsifies(Literal x) const;
  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }
  const std::map<std::uint32_t, bool>& bindings() const { return map_; }
  /// Literals made true, canonical order.
  std::vector<Literal> true_literals() const;
  /// Union with disjoint-or-consistent other; throws on conflict.
  PartialAssignment merged(const PartialAssignment& other) const;

  friend bool operator==(const PartialAssignment&, const PartialAssignment&) = default;
  friend auto operator<=>(const PartialAssignment& a, const PartialAssignment& b) {
    return a.true_literals() <=> b.true_literals();
  }

 private:
  std::map<std::uint32_t, bool> map_;
};

/// φ * F: drop satisfied clauses, strip falsified literals.
ClauseSet apply_assignment(const PartialAssignment& phi, const ClauseSet& F);
/// φ_C: every literal of C set to 0.
PartialAssignment assignment_from_clause(const Clause& C);
/// ⟨x -> 1⟩.
PartialAssignment assign_true(Literal x);

CanonicalKey canonical_form(const ClauseSet& F);

/// Either every literal (unsatisfiable case) or a finite clash-free set.
class ForcedLiterals {
 public:
  struct All {
    friend bool operator==(All, All) = default;
  };
  static ForcedLiterals all() { return ForcedLiterals(All{}); }
  static ForcedLiterals finite(std::vector<Literal> lits);

  bool is_all() const { return std::holds_alternative<All>(value_); }
  bool contains(Literal x) const;
  /// Throws if is_all().
  const std::vector<Literal>& literals() const;

  friend bool operator==(const ForcedLiterals&, const ForcedLiterals&) = default;

 private:
  explicit ForcedLiterals(std::variant<All, std::vector<Literal>> v) : value_(std::move(v)) {}
  std::variant<All, std::vector<Literal>> value_;
};

std::string to_string(Literal x);
std::string to_string(const Clause& c);
std::string to_string(const ClauseSet& F);
std::string to_string(const PartialAssignment& phi);

}  // namespace ucp

template <>
struct std::hash<ucp::Clause> {
  std::size_t operator()(const ucp::Clause& c) const noexcept;
};

template <>
struct std::hash<ucp::ClauseSet> {
  std::size_t operator()(const ucp::ClauseSet& F) const noexcept;
};
