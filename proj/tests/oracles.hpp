// Brute-force reference implementations used only by tests. Everything
// here works by exhaustive enumeration and stays independent of the
// solver and transformation paths it is used to check.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcons/formula.hpp"
#include "pcons/kb.hpp"

namespace pcons::testing {

// All 2^n assignments over the given atoms, in binary counting order.
inline std::vector<TruthAssignment> all_assignments(std::span<const std::string> universe) {
  std::vector<TruthAssignment> out;
  const std::size_t n = universe.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    TruthAssignment t;
    for (std::size_t i = 0; i < n; ++i) {
      t.set(universe[i], (mask >> i) & 1);
    }
    out.push_back(std::move(t));
  }
  return out;
}

inline std::vector<TruthAssignment> all_assignments(const std::vector<std::string>& universe) {
  return all_assignments(std::span<const std::string>(universe));
}

// Expands the abbreviations (&, >, constants) into {~, |} and only then
// evaluates, primitively.
inline bool eval_oracle(const Formula& f, const TruthAssignment& t) {
  switch (f.kind()) {
    case Connective::Atom:
      return t.value(f.atom_name());
    case Connective::Not:
      return !eval_oracle(f.lhs(), t);
    case Connective::Or:
      return eval_oracle(f.lhs(), t) || eval_oracle(f.rhs(), t);
    case Connective::And:
      // a & b == ~(~a | ~b)
      return !(!eval_oracle(f.lhs(), t) || !eval_oracle(f.rhs(), t));
    case Connective::Implies:
      // a > b == ~a | b
      return !eval_oracle(f.lhs(), t) || eval_oracle(f.rhs(), t);
    case Connective::True:
      // true == a | ~a for a fresh atom; always 1
      return true;
    case Connective::False:
      return false;
  }
  return false;
}

inline bool formula_satisfiable_oracle(const Formula& f) {
  const std::set<std::string> atom_set = f.atoms();
  const std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  for (const TruthAssignment& t : all_assignments(atoms)) {
    if (eval_oracle(f, t)) return true;
  }
  return false;
}

// Enumerates every assignment of the clause set's variables.
inline std::optional<std::vector<bool>> clause_set_model_oracle(const ClauseSet& cs) {
  const int n = cs.variable_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<bool> model(n);
    for (int i = 0; i < n; ++i) model[i] = (mask >> i) & 1;
    bool ok = true;
    for (const Clause& clause : cs.clauses()) {
      bool sat = false;
      for (const Literal& lit : clause) {
        if (model[lit.var] == lit.positive) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok) return model;
  }
  return std::nullopt;
}

// Tolerance by enumeration: some assignment over all atoms involved that
// verifies x and falsifies nothing in rest.
inline std::optional<TruthAssignment> tolerated_oracle(const Conditional& x,
                                                       std::span<const Conditional> rest) {
  std::set<std::string> atom_set;
  x.antecedent.collect_atoms(atom_set);
  x.consequent.collect_atoms(atom_set);
  for (const Conditional& r : rest) {
    r.antecedent.collect_atoms(atom_set);
    r.consequent.collect_atoms(atom_set);
  }
  const std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  for (const TruthAssignment& t : all_assignments(atoms)) {
    if (!verifies(t, x)) continue;
    bool clean = true;
    for (const Conditional& r : rest) {
      if (falsifies(t, r)) {
        clean = false;
        break;
      }
    }
    if (clean) return t;
  }
  return std::nullopt;
}

}  // namespace pcons::testing
