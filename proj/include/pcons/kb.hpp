#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pcons/formula.hpp"
#include "pcons/sat.hpp"

namespace pcons {

enum class Modality { Defeasible, Strict };

// A conditional sentence: `antecedent -> consequent` reads "typically, if
// the antecedent then the consequent", `antecedent => consequent` reads
// "if the antecedent it must be the case that the consequent". The arrow
// is always the outermost connective; conditionals never nest.
struct Conditional {
  int id = -1;  // -1 until the sentence joins a KnowledgeBase
  Formula antecedent = Formula::constant(true);
  Formula consequent = Formula::constant(true);
  Modality modality = Modality::Defeasible;

  std::string to_string() const;
};

Conditional make_defeasible(Formula antecedent, Formula consequent);
Conditional make_strict(Formula antecedent, Formula consequent);

// One sentence: `<formula> -> <formula>` or `<formula> => <formula>`.
Conditional parse_conditional(std::string_view line);

// The plain formula `antecedent > consequent`.
Formula material_counterpart(const Conditional& x);

// Same antecedent and modality, consequent negated; the result is
// detached (id -1) until added to a knowledge base.
Conditional negate(const Conditional& x);

// t verifies x when antecedent and consequent both hold under t; t
// falsifies x when the antecedent holds and the consequent does not.
// When the antecedent fails, x is neither verified nor falsified.
bool verifies(const TruthAssignment& t, const Conditional& x);
bool falsifies(const TruthAssignment& t, const Conditional& x);

// Ordered, id-stable collection of conditionals. The defeasible and
// strict sentences together partition the list; the universe is the set
// of atoms appearing anywhere in it.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;

  // One sentence per line; '#' starts a comment, blank lines are skipped.
  // Sentences receive ids 1..n in file order.
  static KnowledgeBase parse(std::string_view text);
  static KnowledgeBase load_file(const std::string& path);

  // Assigns the next free id; returns it.
  int add(Conditional sentence);

  const std::vector<Conditional>& sentences() const { return sentences_; }
  std::vector<Conditional> defeasible() const;
  std::vector<Conditional> strict() const;
  const Conditional* find(int id) const;
  const Conditional& by_id(int id) const;  // ContractViolation when absent

  bool empty() const { return sentences_.empty(); }
  std::size_t size() const { return sentences_.size(); }

  std::vector<std::string> universe() const;  // sorted atom names

  // Sub-base containing exactly the given ids, ids preserved.
  KnowledgeBase subset(const std::set<int>& ids) const;
  // Copy with one extra sentence appended (fresh id).
  KnowledgeBase with(Conditional extra) const;

  std::string to_string() const;

 private:
  std::vector<Conditional> sentences_;
};

// Decides whether x is tolerated by `rest`: some assignment verifies x
// while falsifying nothing in `rest`, i.e. the conjunction of x's
// antecedent, x's consequent and the material counterparts of `rest` is
// satisfiable. Returns such an assignment, completed with `false` over
// any extra atoms of `universe`, or nothing.
std::optional<TruthAssignment> is_tolerated(const Conditional& x,
                                            std::span<const Conditional> rest,
                                            SolverSession& session,
                                            std::span<const std::string> universe = {});
std::optional<TruthAssignment> is_tolerated(const Conditional& x,
                                            std::span<const Conditional> rest);

}  // namespace pcons
