#include "pcons/sat.hpp"

#include <algorithm>
#include <optional>

namespace pcons {

namespace {

constexpr std::int8_t kUnassigned = -1;

std::optional<std::vector<std::int8_t>> dpll_search(const std::vector<Clause>& clauses,
                                                    const std::vector<int>& occurrences,
                                                    std::vector<std::int8_t> assign) {
  // Propagate units until fixpoint, failing on a falsified clause.
  for (;;) {
    bool changed = false;
    bool all_satisfied = true;
    for (const Clause& clause : clauses) {
      bool satisfied = false;
      int unassigned = 0;
      Literal unit{};
      for (const Literal& lit : clause) {
        const std::int8_t v = assign[lit.var];
        if (v == kUnassigned) {
          ++unassigned;
          unit = lit;
        } else if ((v == 1) == lit.positive) {
          satisfied = true;
          break;
        }
      }
      if (satisfied) continue;
      if (unassigned == 0) return std::nullopt;
      all_satisfied = false;
      if (unassigned == 1) {
        assign[unit.var] = unit.positive ? 1 : 0;
        changed = true;
      }
    }
    if (all_satisfied) return assign;
    if (!changed) break;
  }

  int branch = -1;
  for (int var = 0; var < static_cast<int>(assign.size()); ++var) {
    if (assign[var] != kUnassigned) continue;
    if (branch == -1 || occurrences[var] > occurrences[branch]) branch = var;
  }
  for (const std::int8_t value : {std::int8_t{1}, std::int8_t{0}}) {
    auto next = assign;
    next[branch] = value;
    if (auto result = dpll_search(clauses, occurrences, std::move(next))) return result;
  }
  return std::nullopt;
}

}  // namespace

SatResult solve_dpll(const ClauseSet& cs) {
  const int n = cs.variable_count();
  std::vector<int> occurrences(n, 0);
  for (const Clause& clause : cs.clauses()) {
    for (const Literal& lit : clause) ++occurrences[lit.var];
  }
  auto found = dpll_search(cs.clauses(), occurrences, std::vector<std::int8_t>(n, kUnassigned));
  if (!found) return SatResult::unsat();
  std::vector<bool> model(n, false);
  for (int var = 0; var < n; ++var) model[var] = (*found)[var] == 1;
  return SatResult::sat(std::move(model));
}

SatResult solve_horn(const ClauseSet& cs) {
  if (!is_horn(cs)) throw ContractViolation("solve_horn requires a Horn clause set");

  const auto& clauses = cs.clauses();
  const int n = cs.variable_count();

  struct HornClause {
    int head = -1;    // the positive literal, if any
    int pending = 0;  // negative literals not yet forced true
  };
  std::vector<HornClause> horn(clauses.size());
  std::vector<std::vector<int>> negative_occurrences(n);
  std::vector<bool> forced(n, false);
  std::vector<int> queue;

  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (clauses[i].empty()) return SatResult::unsat();
    for (const Literal& lit : clauses[i]) {
      if (lit.positive) {
        horn[i].head = lit.var;
      } else {
        negative_occurrences[lit.var].push_back(static_cast<int>(i));
        ++horn[i].pending;
      }
    }
    if (horn[i].pending == 0 && !forced[horn[i].head]) {
      forced[horn[i].head] = true;
      queue.push_back(horn[i].head);
    }
  }

  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (const int ci : negative_occurrences[queue[qi]]) {
      if (--horn[ci].pending != 0) continue;
      const int head = horn[ci].head;
      if (head == -1) return SatResult::unsat();  // all-negative clause exhausted
      if (!forced[head]) {
        forced[head] = true;
        queue.push_back(head);
      }
    }
  }

  std::vector<bool> model(forced.begin(), forced.end());
  return SatResult::sat(std::move(model));
}

}  // namespace pcons
