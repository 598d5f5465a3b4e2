// DIMACS CNF and JSON encodings of clause-sets.
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ucp/core.hpp"

namespace ucp {

/// Reads "p cnf n m" followed by zero-terminated clauses. 'c' lines are
/// comments. Duplicate literals and duplicate clauses collapse; a clause
/// holding x and -x is rejected with its line number.
ClauseSet parse_dimacs(std::istream& in);
ClauseSet parse_dimacs(std::string_view text);

/// Header uses n = max variable id. Each comment becomes a "c " line.
std::string emit_dimacs(const ClauseSet& F, const std::vector<std::string>& comments = {});

/// Whitespace- or comma-separated signed integers, optional trailing 0.
Clause parse_clause(std::string_view text);

nlohmann::json to_json(const Clause& c);
nlohmann::json to_json(const ClauseSet& F);
nlohmann::json to_json(const PartialAssignment& phi);
ClauseSet clause_set_from_json(const nlohmann::json& j);

}  // namespace ucp
