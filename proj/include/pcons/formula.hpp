#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcons/errors.hpp"

namespace pcons {

enum class Connective { Atom, Not, And, Or, Implies, True, False };

class TruthAssignment;

// Immutable propositional formula over named atoms. Negation and
// disjunction are the primitive connectives; conjunction, material
// implication and the constants are abbreviations that evaluate the same
// as their expansions but keep their own node kind so printing round-trips.
//
// Copies share structure; a Formula is a cheap value.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula constant(bool value);

  Connective kind() const { return node_->kind; }
  const std::string& atom_name() const;  // kind() == Atom
  Formula lhs() const;                   // left operand; Not: the operand
  Formula rhs() const;                   // right operand of a binary node

  // Standard boolean semantics; throws UnknownAtomError when an atom of
  // the formula is outside the assignment's universe.
  bool evaluate(const TruthAssignment& t) const;

  void collect_atoms(std::set<std::string>& out) const;
  std::set<std::string> atoms() const;

  // Prints with the fewest parentheses that still re-parse to the
  // identical tree (parse_formula is the exact inverse).
  std::string to_string() const;

  // Structural equality.
  bool equals(const Formula& other) const;
  friend bool operator==(const Formula& a, const Formula& b) { return a.equals(b); }

 private:
  struct Node {
    Connective kind;
    std::string name;  // Atom only
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Grammar, loosest to tightest: '>' (material implication, right
// associative), '|', '&', '~'/'!' (prefix), atoms [a-zA-Z][a-zA-Z0-9_]*
// except the keywords 'true' and 'false', and parentheses.
Formula parse_formula(std::string_view text);

// A total map from a finite universe of atoms to {0, 1}. The universe is
// simply the key set; evaluating a formula whose atoms all lie in the
// universe never fails.
class TruthAssignment {
 public:
  TruthAssignment() = default;
  explicit TruthAssignment(std::map<std::string, bool> values)
      : values_(std::move(values)) {}

  static TruthAssignment all_false(std::span<const std::string> universe);

  bool contains(const std::string& atom) const { return values_.count(atom) != 0; }
  bool value(const std::string& atom) const;
  void set(const std::string& atom, bool v) { values_[atom] = v; }

  // Copy whose universe additionally covers `universe`; atoms not already
  // present default to false.
  TruthAssignment completed(std::span<const std::string> universe) const;

  const std::map<std::string, bool>& values() const { return values_; }
  std::size_t universe_size() const { return values_.size(); }

  std::string to_string() const;  // "a=1 b=0 c=1"

  friend bool operator==(const TruthAssignment&, const TruthAssignment&) = default;
  friend auto operator<=>(const TruthAssignment&, const TruthAssignment&) = default;

 private:
  std::map<std::string, bool> values_;
};

struct Literal {
  int var = 0;
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

// Clause-form image of a formula, equisatisfiable with it. Variables are
// dense indices; named variables are atoms of the source universe, the
// unnamed ones are auxiliary definition variables introduced by
// to_clauses. Any model, projected onto the named variables, satisfies
// the source formula.
class ClauseSet {
 public:
  // Registers (or finds) a named variable.
  int add_variable(const std::string& name);
  int add_aux_variable();

  int variable_count() const { return static_cast<int>(names_.size()); }
  bool is_original(int var) const { return names_[var].has_value(); }
  const std::optional<std::string>& name_of(int var) const { return names_[var]; }
  std::optional<int> find_variable(const std::string& name) const;

  // Literals are deduplicated and tautological clauses dropped; the empty
  // clause is legal and marks the set unsatisfiable.
  void add_clause(Clause clause);
  const std::vector<Clause>& clauses() const { return clauses_; }

  // Assignment over the named variables only.
  TruthAssignment project(const std::vector<bool>& model) const;

 private:
  std::vector<Clause> clauses_;
  std::vector<std::optional<std::string>> names_;
  std::map<std::string, int> index_;
};

// Definitional clause transformation. Subformulas that already are
// clauses (after constant elimination) pass through untouched, so a
// conjunction of Horn material implications stays Horn; only genuinely
// nested structure gets auxiliary definition variables, and those only in
// the polarity actually used.
ClauseSet to_clauses(const Formula& f);

// True iff every clause has at most one positive literal.
bool is_horn(const ClauseSet& cs);

}  // namespace pcons
