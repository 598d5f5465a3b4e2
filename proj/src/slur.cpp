#include "ucp/slur.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "ucp/reductions.hpp"

namespace ucp {

namespace {

// Unit propagation from G as an assignment ψ with ψ * G = r_1(G). On a
// conflict the trail is completed by setting the untouched variables of G
// to 0, which leaves exactly {⊥}.
DecisionOutcome propagate(const ClauseSet& G) {
  Propagation p = unit_propagate(G);
  if (p.conflict) {
    for (Variable v : G.vars())
      if (!p.trail.value(v)) p.trail.bind(v, false);
  }
  return {p.trail, p.result};
}

class Decisions {
 public:
  const std::vector<DecisionOutcome>& of(const ClauseSet& G, unsigned k) {
    auto& slot = memo_[k];
    if (auto it = slot.find(G); it != slot.end()) return it->second;
    std::vector<DecisionOutcome> out = compute(G, k);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return memo_[k].emplace(G, std::move(out)).first->second;
  }

 private:
  std::vector<DecisionOutcome> compute(const ClauseSet& G, unsigned k) {
    if (k == 0) return {propagate(G)};
    std::vector<DecisionOutcome> out;
    for (unsigned j = 0; j < k; ++j) {
      for (const DecisionOutcome& d : of(G, j))
        if (d.result.is_top()) out.push_back(d);
    }
    for (Literal x : G.lits()) {
      const DecisionOutcome step = propagate(apply_assignment(assign_true(x), G));
      PartialAssignment head = assign_true(x).merged(step.phi);
      if (step.result.is_bottom()) {
        // Further decisions cannot change {⊥}; complete head so φ * G = {⊥}.
        for (Variable v : G.vars())
          if (!head.value(v)) head.bind(v, false);
        out.push_back({head, ClauseSet::bottom()});
        continue;
      }
      for (const DecisionOutcome& rest : of(step.result, k - 1))
        out.push_back({head.merged(rest.phi), rest.result});
    }
    return out;
  }

  std::map<unsigned, std::unordered_map<ClauseSet, std::vector<DecisionOutcome>>> memo_;
};

std::vector<ClauseSet> sorted_unique(std::vector<ClauseSet> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::vector<DecisionOutcome> k_decision_assignments(const ClauseSet& F, unsigned k) {
  Decisions d;
  return d.of(F, k);
}

std::vector<ClauseSet> slur_successors(const ClauseSet& F, const TransitionConfig& cfg) {
  std::vector<ClauseSet> out;
  if (cfg.variant == SlurVariant::SlurK) {
    for (Literal x : F.lits()) {
      ClauseSet G = rk(cfg.k, apply_assignment(assign_true(x), F));
      if (!G.is_bottom()) out.push_back(std::move(G));
    }
  } else {
    if (cfg.k == 0) throw PreconditionError("AltSlurStarK needs k >= 1");
    // The ⊤-reaching disjunct would give ⊤ -> ⊤ (and φ = ε loops in
    // general); self-loops are dropped so terminal states exist.
    for (const DecisionOutcome& d : k_decision_assignments(F, cfg.k))
      if (!d.result.is_bottom() && d.result != F) out.push_back(d.result);
  }
  return sorted_unique(std::move(out));
}

SlurExploration slur_explore(const ClauseSet& F, const TransitionConfig& cfg, std::size_t max_vars) {
  if (F.n() > max_vars)
    throw GuardRefusal("slur: n(F) = " + std::to_string(F.n()) + " exceeds the simulation bound " +
                       std::to_string(max_vars));
  SlurExploration ex;
  std::unordered_map<ClauseSet, std::size_t> index;
  std::deque<std::size_t> queue;
  index.emplace(F, 0);
  ex.states.push_back(F);
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t at = queue.front();
    queue.pop_front();
    const std::vector<ClauseSet> next = slur_successors(ex.states[at], cfg);
    if (next.empty()) ex.terminals.push_back(ex.states[at]);
    for (const ClauseSet& G : next) {
      auto [it, fresh] = index.emplace(G, ex.states.size());
      if (fresh) {
        ex.states.push_back(G);
        queue.push_back(it->second);
      }
      ex.edges.emplace_back(at, it->second);
    }
  }
  ex.terminals = sorted_unique(std::move(ex.terminals));
  return ex;
}

std::vector<ClauseSet> slur_terminal_set(const ClauseSet& F, const TransitionConfig& cfg,
                                         std::size_t max_vars) {
  return slur_explore(F, cfg, max_vars).terminals;
}

bool slur_member(const ClauseSet& F, const TransitionConfig& cfg, std::size_t max_vars) {
  const std::vector<ClauseSet> terminals = slur_terminal_set(F, cfg, max_vars);
  const bool only_top = terminals.size() == 1 && terminals.front().is_top();
  if (cfg.variant == SlurVariant::SlurK) return rk(cfg.k, F).is_bottom() || only_top;
  const bool only_self = terminals.size() == 1 && terminals.front() == F;
  return only_self || only_top;
}

}  // namespace ucp
