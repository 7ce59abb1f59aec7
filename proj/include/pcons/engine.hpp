#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pcons/consistency.hpp"
#include "pcons/semantics.hpp"

namespace pcons {

// How a candidate sentence x relates to a consistent base X:
//   ConsistentWith            X + x is consistent.
//   SubstantivelyInconsistent X + x is inconsistent although x's
//                             antecedent is possible alongside X.
//   NonSubstantive            the inconsistency is explained away by the
//                             antecedent itself being impossible.
enum class SubstantiveClass { ConsistentWith, SubstantivelyInconsistent, NonSubstantive };

// Evidence trail: the verdict for X + x and, when it was consulted, the
// verdict for X + the antecedent probe.
struct SubstantiveResult {
  SubstantiveClass cls;
  ConsistencyVerdict with_sentence;
  std::optional<ConsistencyVerdict> with_probe;
};

enum class EntailmentKind { Entailed, NegationEntailed, Ambiguous, AntecedentImpossible };

struct EntailmentResult {
  EntailmentKind kind;
  SubstantiveResult negation;  // classification of X + ~d
  SubstantiveResult query;     // classification of X + d
};

// The probe sentence `antecedent -> antecedent`: verified exactly where
// the antecedent holds and falsified nowhere, so X + probe stays
// consistent precisely when the antecedent remains possible in X's
// high-confidence models.
Conditional antecedent_probe(const Formula& antecedent);

// Requires X consistent.
SubstantiveResult classify_substantive(const KnowledgeBase& X, const Conditional& x,
                                       SolverSession& session);

// Decides whether the consistent base X forces the defeasible query d:
// adding ~d must be substantively inconsistent. Adding d itself
// substantively inconsistent means ~d is forced instead; both additions
// consistent leaves the question ambiguous; a non-substantive clash means
// d's antecedent cannot occur at all.
EntailmentResult p_entails(const KnowledgeBase& X, const Conditional& d, SolverSession& session);

// Decides whether the strict query follows with certainty: some subset S'
// of the strict part must leave the query's antecedent possible while
// refusing to tolerate the negated query. Subsets are searched largest
// first. Refuses strict parts larger than `max_strict`.
bool strict_p_entails(const KnowledgeBase& X, const Conditional& query, SolverSession& session,
                      std::size_t max_strict = 16);

SubstantiveResult classify_substantive(const KnowledgeBase& X, const Conditional& x);
EntailmentResult p_entails(const KnowledgeBase& X, const Conditional& d);
bool strict_p_entails(const KnowledgeBase& X, const Conditional& query);

const char* to_string(SubstantiveClass cls);
const char* to_string(EntailmentKind kind);

// Command-line front end; returns the process exit code. 0: consistent or
// entailed; 1: inconsistent, not entailed or ambiguous; 2: parse or
// contract errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcons
