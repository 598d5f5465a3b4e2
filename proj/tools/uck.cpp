// uck: command-line front end for the ucp library.
//
// Exit status: 0 computed, 2 refused by a size guard, 1 any other error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ucp/bases.hpp"
#include "ucp/core.hpp"
#include "ucp/families.hpp"
#include "ucp/hardness.hpp"
#include "ucp/io.hpp"
#include "ucp/oracle.hpp"
#include "ucp/reductions.hpp"
#include "ucp/resolution.hpp"
#include "ucp/slur.hpp"

namespace {

using nlohmann::json;
using namespace ucp;

constexpr const char* kVersion = "0.1.0";
constexpr const char* kSchema = "ucp-report/1";

struct Options {
  std::string path = "-";
  unsigned k = 1;
  std::string k_text = "1";
  std::string clause;
  std::string variant = "slur";
  std::uint64_t budget = kDefaultWitnessBudget;
  std::size_t phd_max_vars = kEnumerationMaxVars;
  std::size_t slur_max_vars = kSlurMaxVars;
  bool phd = false, whd = false, witness = false, oracle = false;
  bool json_out = false, deterministic = false;

  std::string family;
  std::string base_family = "full";
  unsigned n = 0, m = 0, width = 3;
  std::size_t c = 0;
  std::uint64_t seed = 0;
};

struct Input {
  std::string path;
  std::string digest;
  ClauseSet F;
};

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Input read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return {path, "fnv1a64:" + fnv1a64(text), parse_dimacs(text)};
}

Level parse_level(const std::string& s) {
  if (s == "inf" || s == "unbounded") return kUnbounded;
  std::size_t pos = 0;
  const unsigned long v = std::stoul(s, &pos);
  if (pos != s.size()) throw Error("bad level: " + s);
  return static_cast<unsigned>(v);
}

json tags_json(const ClauseSet& F) {
  json out = json::array();
  for (ClassTag t : classify(F).tags) out.push_back(to_string(t));
  return out;
}

bool is_2cnf(const ClauseSet& F) { return classify(F).has(ClassTag::TwoCnf); }

json witness_tree(const ClauseSet& F, const Clause& C, unsigned k, std::uint64_t budget) {
  const DerivationResult d = derives_nested_witness(F, C, k, budget);
  json out{{"nodes", d.nodes}};
  switch (d.outcome) {
    case Derivability::Derivable:
      out["status"] = "derivable";
      out["tree"] = to_json(*d.witness);
      break;
    case Derivability::NotDerivable:
      out["status"] = "not_derivable";
      break;
    case Derivability::BudgetExhausted:
      out["status"] = "budget_exhausted";
      break;
  }
  return out;
}

json cmd_analyze(const Options& o, const ClauseSet& F) {
  // Refuse before spending time on hd.
  if ((o.phd || o.whd) && F.n() > o.phd_max_vars)
    throw GuardRefusal("n(F) = " + std::to_string(F.n()) + " exceeds --max-vars " + std::to_string(o.phd_max_vars));
  json r{{"n", F.n()}, {"c", F.c()}, {"ell", F.ell()}, {"classes", tags_json(F)},
         {"satisfiable", oracle::satisfiable(F)}};
  const bool two = is_2cnf(F);
  r["method"] = two ? "2cnf" : "general";
  // 2-CNF still goes through hardness() when a witness is asked for.
  if (two) r["hd"] = hardness_2cnf(F);
  if (!two || o.witness) {
    const HardnessReport h = hardness(F);
    r["hd"] = h.value;
    r["hd_witness"] = h.witness ? to_json(*h.witness) : json(nullptr);
    if (o.witness && h.witness) r["witness"] = witness_tree(F, *h.witness, h.value, o.budget);
  }
  if (o.phd) {
    const PHardnessReport p = p_hardness(F, o.phd_max_vars);
    r["phd"] = p.value;
    r["phd_witness"] = p.witness ? to_json(*p.witness) : json(nullptr);
  }
  if (o.whd) {
    const WHardnessReport w = w_hardness(F, WhdMode::PrimeImplicates, o.phd_max_vars);
    r["whd"] = w.value;
    r["whd_witness"] = w.witness ? to_json(*w.witness) : json(nullptr);
  }
  if (o.oracle) {
    const unsigned ref = oracle::hardness_bruteforce(F);
    r["oracle"] = {{"hd", ref}, {"agrees", ref == r["hd"].get<unsigned>()}};
  }
  return r;
}

json cmd_reduce(const Options& o, const ClauseSet& F) {
  const ClauseSet R = rk(o.k, F);
  return {{"k", o.k}, {"reduced", to_json(R)}, {"is_bottom", R.is_bottom()}};
}

json cmd_implies(const Options& o, const ClauseSet& F) {
  const Clause C = parse_clause(o.clause);
  json r{{"clause", to_json(C)}, {"k", o.k}, {"implies", implies_k(F, C, o.k)}};
  if (o.witness) r["witness"] = witness_tree(F, C, o.k, o.budget);
  if (o.oracle) r["oracle"] = {{"entailed", oracle::implies(F, C)}};
  return r;
}

json cmd_primes(const Options& o, const ClauseSet& F) {
  const ClauseSet P = is_2cnf(F) ? prime_implicates_2cnf(F) : prime_implicates(F);
  json r{{"count", P.c()}, {"primes", to_json(P)}};
  if (o.oracle) r["oracle"] = {{"agrees", oracle::prime_implicates_bruteforce(F) == P}};
  return r;
}

json cmd_slur(const Options& o, const ClauseSet& F) {
  TransitionConfig cfg{o.k, SlurVariant::SlurK};
  if (o.variant == "altslur") cfg.variant = SlurVariant::AltSlurStarK;
  else if (o.variant != "slur") throw Error("unknown variant: " + o.variant);
  const SlurExploration ex = slur_explore(F, cfg, o.slur_max_vars);
  json states = json::array(), edges = json::array(), terminals = json::array();
  for (const ClauseSet& s : ex.states) states.push_back(to_json(s));
  for (auto [a, b] : ex.edges) edges.push_back({a, b});
  for (const ClauseSet& t : ex.terminals) terminals.push_back(to_json(t));
  json r{{"k", o.k},
         {"variant", o.variant},
         {"member", slur_member(F, cfg, o.slur_max_vars)},
         {"terminals", terminals},
         {"trace", {{"states", states}, {"edges", edges}}}};
  if (o.oracle && cfg.variant == SlurVariant::SlurK) r["oracle"] = {{"uc_member", uc_member(F, o.k)}};
  return r;
}

json cmd_base(const Options& o, const ClauseSet& F) {
  const Level k = parse_level(o.k_text);
  const bool two = is_2cnf(F);
  const BaseSearchResult b = two ? min_base_2cnf(F, k) : min_base_from_primes(prime_implicates(F), k, o.budget);
  return {{"k", k ? json(*k) : json("inf")},
          {"method", two ? "2cnf" : "prime-subsets"},
          {"base", to_json(b.base)},
          {"cardinality", b.cardinality},
          {"size", b.size},
          {"exact", b.exact},
          {"trace", b.trace}};
}

Family family_from(const std::string& name) {
  static const std::map<std::string, Family> names{
      {"full", Family::Full},           {"full-minus-one", Family::FullMinusOne},
      {"pump", Family::Pump},           {"horn-chain", Family::HornChain},
      {"php", Family::Php},             {"random", Family::RandomKCnf}};
  const auto it = names.find(name);
  if (it == names.end()) throw Error("unknown family: " + name);
  return it->second;
}

FamilySpec family_spec(const Options& o) {
  FamilySpec s;
  s.family = family_from(o.family);
  s.n = o.n;
  s.m = o.m;
  s.k = o.width;
  s.c = o.c;
  s.seed = o.seed;
  if (s.family == Family::Pump) {
    FamilySpec inner = s;
    inner.family = family_from(o.base_family);
    if (inner.family == Family::Pump) throw Error("pump base must not be pump");
    s = FamilySpec();
    s.family = Family::Pump;
    s.base.push_back(inner);
  }
  return s;
}

void emit(const Options& o, const std::string& command, const Input* in, json result,
          std::chrono::steady_clock::time_point start) {
  json report{{"schema", kSchema}, {"command", command}, {"result", std::move(result)}};
  report["input"] = in ? json{{"path", in->path}, {"digest", in->digest}} : json(nullptr);
  report["versions"] = {{"uck", kVersion}, {"report", 1}};
  if (!o.deterministic) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  std::cout << report.dump(2) << '\n';
}

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  return v && *v ? static_cast<std::size_t>(std::stoull(v)) : fallback;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  o.budget = env_size("UCK_NODE_BUDGET", o.budget);
  o.phd_max_vars = env_size("UCK_PHD_MAX_VARS", o.phd_max_vars);
  o.slur_max_vars = env_size("UCK_SLUR_MAX_VARS", o.slur_max_vars);

  CLI::App app{"Unit-propagation hierarchy analysis of CNF clause-sets"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("input", o.path, "DIMACS file, or - for stdin")->capture_default_str();
    sub->add_flag("--deterministic", o.deterministic, "Omit timings from the report");
    sub->add_flag("--json", o.json_out, "JSON report instead of DIMACS (reduce, gen)");
    sub->add_option("--budget", o.budget, "Node budget for searches (env UCK_NODE_BUDGET)");
  };

  auto* analyze = app.add_subcommand("analyze", "hd, class tags, optional phd/whd");
  common(analyze);
  analyze->add_flag("--phd", o.phd, "Also compute phd (guarded)");
  analyze->add_flag("--whd", o.whd, "Also compute whd (guarded)");
  analyze->add_flag("--witness", o.witness, "Emit a resolution tree for the hardest prime implicate");
  analyze->add_flag("--oracle", o.oracle, "Cross-check hd by brute force");
  analyze->add_option("--max-vars", o.phd_max_vars, "Guard for phd/whd (env UCK_PHD_MAX_VARS)");

  auto* reduce = app.add_subcommand("reduce", "Apply r_k, print DIMACS");
  common(reduce);
  reduce->add_option("--k", o.k, "Level")->capture_default_str();

  auto* implies = app.add_subcommand("implies", "Decide F |=_k C");
  common(implies);
  implies->add_option("--clause", o.clause, "Signed integers, e.g. \"1 -2\"")->required();
  implies->add_option("--k", o.k, "Level")->capture_default_str();
  implies->add_flag("--witness", o.witness, "Emit a resolution tree");
  implies->add_flag("--oracle", o.oracle, "Cross-check entailment by brute force");

  auto* primes = app.add_subcommand("primes", "Prime implicates");
  common(primes);
  primes->add_flag("--oracle", o.oracle, "Cross-check by brute force");

  auto* slur = app.add_subcommand("slur", "SLUR_k terminal set and reachability trace");
  common(slur);
  slur->add_option("--k", o.k, "Level")->capture_default_str();
  slur->add_option("--variant", o.variant, "slur or altslur")->check(CLI::IsMember({"slur", "altslur"}));
  slur->add_option("--max-vars", o.slur_max_vars, "Guard (env UCK_SLUR_MAX_VARS)");
  slur->add_flag("--oracle", o.oracle, "Cross-check membership against UC_k");

  auto* base = app.add_subcommand("base", "Minimum equivalent k-base");
  common(base);
  base->add_option("--k", o.k_text, "Level, or inf")->capture_default_str();

  auto* gen = app.add_subcommand("gen", "Generate a family instance as DIMACS");
  gen->add_option("--family", o.family, "full, full-minus-one, pump, horn-chain, php, random")->required();
  gen->add_option("--base", o.base_family, "Family pumped by pump")->capture_default_str();
  gen->add_option("--n", o.n, "Variables, or holes for php");
  gen->add_option("--m", o.m, "Pigeons for php");
  gen->add_option("--k", o.width, "Clause width for random")->capture_default_str();
  gen->add_option("--c", o.c, "Clause count for random");
  gen->add_option("--seed", o.seed, "Seed for random");
  gen->add_flag("--json", o.json_out, "JSON report instead of DIMACS");
  gen->add_flag("--deterministic", o.deterministic, "Omit timings from the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (gen->parsed()) {
      const FamilySpec params = family_spec(o);
      const ClauseSet F = generate(params);
      if (o.json_out) {
        emit(o, "gen", nullptr, {{"family", params.describe()}, {"clauses", to_json(F)}}, start);
      } else {
        std::cout << emit_dimacs(F, {params.describe()});
      }
      return 0;
    }

    const Input in = read_input(o.path);
    if (reduce->parsed()) {
      if (o.json_out) emit(o, "reduce", &in, cmd_reduce(o, in.F), start);
      else std::cout << emit_dimacs(rk(o.k, in.F));
      return 0;
    }
    json result;
    std::string name;
    if (analyze->parsed()) name = "analyze", result = cmd_analyze(o, in.F);
    else if (implies->parsed()) name = "implies", result = cmd_implies(o, in.F);
    else if (primes->parsed()) name = "primes", result = cmd_primes(o, in.F);
    else if (slur->parsed()) name = "slur", result = cmd_slur(o, in.F);
    else name = "base", result = cmd_base(o, in.F);
    emit(o, name, &in, std::move(result), start);
    return 0;
  } catch (const GuardRefusal& e) {
    std::cerr << "uck: refused: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "uck: error: " << e.what() << '\n';
    return 1;
  }
}
