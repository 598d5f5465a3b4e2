#include "ucp/io.hpp"

#include <cstdlib>
#include <istream>
#include <sstream>

namespace ucp {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

bool parse_int(std::string_view tok, long long& out) {
  if (tok.empty()) return false;
  std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (i == tok.size()) return false;
  long long v = 0;
  for (; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') return false;
    v = v * 10 + (tok[i] - '0');
    if (v > (1ll << 31)) return false;
  }
  out = tok[0] == '-' ? -v : v;
  return true;
}

}  // namespace

ClauseSet parse_dimacs(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  long long declared_vars = 0;
  std::vector<Clause> clauses;
  std::vector<int> current;
  std::size_t clause_start = 0;

  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == 'c') continue;
    if (line[first] == '%') break;  // SATLIB trailer
    if (line[first] == 'p') {
      if (have_header) fail(lineno, "duplicate header");
      std::istringstream hs(line.substr(first));
      std::string p, fmt, extra;
      long long n = -1, m = -1;
      if (!(hs >> p >> fmt >> n >> m) || p != "p" || fmt != "cnf" || n < 0 || m < 0 || (hs >> extra))
        fail(lineno, "malformed header, expected \"p cnf <vars> <clauses>\"");
      declared_vars = n;
      have_header = true;
      continue;
    }
    if (!have_header) fail(lineno, "clause data before \"p cnf\" header");
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      long long v = 0;
      if (!parse_int(tok, v)) fail(lineno, "not an integer literal: \"" + tok + "\"");
      if (current.empty()) clause_start = lineno;
      if (v == 0) {
        std::vector<Literal> lits;
        for (int x : current) lits.push_back(Literal::from_dimacs(x));
        try {
          clauses.emplace_back(std::move(lits));
        } catch (const PreconditionError&) {
          fail(clause_start, "tautological clause (contains a literal and its complement)");
        }
        current.clear();
        continue;
      }
      if (std::llabs(v) > declared_vars)
        fail(lineno, "literal " + tok + " exceeds declared variable count " +
                         std::to_string(declared_vars));
      current.push_back(static_cast<int>(v));
    }
  }
  if (!have_header) fail(lineno, "missing \"p cnf\" header");
  if (!current.empty()) fail(lineno, "last clause is not terminated by 0");
  return ClauseSet(std::move(clauses));
}

ClauseSet parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

std::string emit_dimacs(const ClauseSet& F, const std::vector<std::string>& comments) {
  std::ostringstream os;
  for (const auto& c : comments) os << "c " << c << '\n';
  os << "p cnf " << F.max_var() << ' ' << F.c() << '\n';
  for (const Clause& c : F) {
    for (Literal x : c) os << x.to_dimacs() << ' ';
    os << "0\n";
  }
  return os.str();
}

Clause parse_clause(std::string_view text) {
  std::string s(text);
  for (char& ch : s)
    if (ch == ',') ch = ' ';
  std::istringstream is(s);
  std::string tok;
  std::vector<int> lits;
  bool terminated = false;
  while (is >> tok) {
    long long v = 0;
    if (terminated || !parse_int(tok, v)) throw ParseError("bad clause literal \"" + tok + "\"");
    if (v == 0) {
      terminated = true;
      continue;
    }
    lits.push_back(static_cast<int>(v));
  }
  try {
    return Clause::from_dimacs(lits);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("bad clause: ") + e.what());
  }
}

nlohmann::json to_json(const Clause& c) { return c.to_dimacs(); }

nlohmann::json to_json(const ClauseSet& F) {
  auto j = nlohmann::json::array();
  for (const Clause& c : F) j.push_back(to_json(c));
  return j;
}

nlohmann::json to_json(const PartialAssignment& phi) {
  auto j = nlohmann::json::array();
  for (Literal x : phi.true_literals()) j.push_back(x.to_dimacs());
  return j;
}

ClauseSet clause_set_from_json(const nlohmann::json& j) {
  std::vector<Clause> cls;
  for (const auto& c : j) cls.push_back(Clause::from_dimacs(c.get<std::vector<int>>()));
  return ClauseSet(std::move(cls));
}

}  // namespace ucp
