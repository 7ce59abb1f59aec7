#pragma once

#include <cstdint>
#include <vector>

#include "pcons/formula.hpp"

namespace pcons {

// Outcome of a satisfiability query. A model assigns every variable of the
// clause set, auxiliary ones included.
struct SatResult {
  bool satisfiable = false;
  std::vector<bool> model;  // indexed by variable; empty when unsatisfiable

  static SatResult sat(std::vector<bool> m) { return {true, std::move(m)}; }
  static SatResult unsat() { return {false, {}}; }
};

// Complete DPLL with unit propagation. Branching is deterministic: the
// unassigned variable occurring in the most clauses (lowest index on
// ties), positive polarity first, so witness models are reproducible.
SatResult solve_dpll(const ClauseSet& cs);

// Unit propagation from the positive unit clauses, with one pending-body
// counter per clause; linear in the total number of literal occurrences.
// Requires is_horn(cs). A satisfiable answer carries the minimal model:
// exactly the forced variables are true.
SatResult solve_horn(const ClauseSet& cs);

struct SolveStats {
  std::uint64_t total = 0;
  std::uint64_t horn = 0;
  std::uint64_t dpll = 0;
};

// Routes each query to the Horn or DPLL solver and tallies the calls.
// Every reasoning task owns one session; sessions are never shared.
class SolverSession {
 public:
  SatResult solve(const ClauseSet& cs) {
    ++stats_.total;
    if (is_horn(cs)) {
      ++stats_.horn;
      return solve_horn(cs);
    }
    ++stats_.dpll;
    return solve_dpll(cs);
  }

  const SolveStats& stats() const { return stats_; }
  void reset() { stats_ = {}; }

 private:
  SolveStats stats_;
};

}  // namespace pcons
