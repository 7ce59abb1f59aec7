#include "pcons/engine.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace pcons {

namespace {

void require_consistent(const KnowledgeBase& X, SolverSession& session, const char* who) {
  if (!check_consistency(X, session).is_consistent()) {
    throw ContractViolation(std::string(who) + " requires a consistent base");
  }
}

SubstantiveResult classify_unchecked(const KnowledgeBase& X, const Conditional& x,
                                     SolverSession& session) {
  ConsistencyVerdict with_sentence = check_consistency(X.with(x), session);
  if (with_sentence.is_consistent()) {
    return {SubstantiveClass::ConsistentWith, std::move(with_sentence), std::nullopt};
  }
  ConsistencyVerdict with_probe = check_consistency(X.with(antecedent_probe(x.antecedent)), session);
  const SubstantiveClass cls = with_probe.is_consistent()
                                   ? SubstantiveClass::SubstantivelyInconsistent
                                   : SubstantiveClass::NonSubstantive;
  return {cls, std::move(with_sentence), std::move(with_probe)};
}

}  // namespace

Conditional antecedent_probe(const Formula& antecedent) {
  return make_defeasible(antecedent, antecedent);
}

SubstantiveResult classify_substantive(const KnowledgeBase& X, const Conditional& x,
                                       SolverSession& session) {
  require_consistent(X, session, "classify_substantive");
  return classify_unchecked(X, x, session);
}

EntailmentResult p_entails(const KnowledgeBase& X, const Conditional& d, SolverSession& session) {
  if (d.modality != Modality::Defeasible) {
    throw ContractViolation("p_entails takes a defeasible query; use strict_p_entails");
  }
  require_consistent(X, session, "p_entails");

  SubstantiveResult negation = classify_unchecked(X, negate(d), session);
  SubstantiveResult query = classify_unchecked(X, d, session);

  EntailmentKind kind;
  if (negation.cls == SubstantiveClass::NonSubstantive ||
      query.cls == SubstantiveClass::NonSubstantive) {
    kind = EntailmentKind::AntecedentImpossible;
  } else if (negation.cls == SubstantiveClass::SubstantivelyInconsistent) {
    kind = EntailmentKind::Entailed;
  } else if (query.cls == SubstantiveClass::SubstantivelyInconsistent) {
    kind = EntailmentKind::NegationEntailed;
  } else {
    kind = EntailmentKind::Ambiguous;
  }
  return {kind, std::move(negation), std::move(query)};
}

bool strict_p_entails(const KnowledgeBase& X, const Conditional& query, SolverSession& session,
                      std::size_t max_strict) {
  if (query.modality != Modality::Strict) {
    throw ContractViolation("strict_p_entails takes a strict query; use p_entails");
  }
  require_consistent(X, session, "strict_p_entails");

  const std::vector<Conditional> stricts = X.strict();
  const std::size_t n = stricts.size();
  if (n > max_strict) {
    throw BoundExceededError("strict part of size " + std::to_string(n) +
                             " exceeds the subset-search bound " + std::to_string(max_strict));
  }

  const Conditional negated_query = negate(query);
  const Conditional possibility = make_defeasible(Formula::constant(true), query.antecedent);

  // Largest subsets first; within one size, by ascending bitmask.
  std::vector<std::uint32_t> masks(std::size_t{1} << n);
  std::iota(masks.begin(), masks.end(), 0u);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) > std::popcount(b);
  });

  for (const std::uint32_t mask : masks) {
    std::vector<Conditional> chosen;
    KnowledgeBase candidate;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        chosen.push_back(stricts[i]);
        candidate.add(stricts[i]);
      }
    }
    if (is_tolerated(negated_query, chosen, session)) continue;
    if (check_consistency(candidate.with(possibility), session).is_consistent()) return true;
  }
  return false;
}

SubstantiveResult classify_substantive(const KnowledgeBase& X, const Conditional& x) {
  SolverSession session;
  return classify_substantive(X, x, session);
}

EntailmentResult p_entails(const KnowledgeBase& X, const Conditional& d) {
  SolverSession session;
  return p_entails(X, d, session);
}

bool strict_p_entails(const KnowledgeBase& X, const Conditional& query) {
  SolverSession session;
  return strict_p_entails(X, query, session);
}

const char* to_string(SubstantiveClass cls) {
  switch (cls) {
    case SubstantiveClass::ConsistentWith:
      return "ConsistentWith";
    case SubstantiveClass::SubstantivelyInconsistent:
      return "SubstantivelyInconsistent";
    case SubstantiveClass::NonSubstantive:
      return "NonSubstantive";
  }
  return "?";
}

const char* to_string(EntailmentKind kind) {
  switch (kind) {
    case EntailmentKind::Entailed:
      return "Entailed";
    case EntailmentKind::NegationEntailed:
      return "NegationEntailed";
    case EntailmentKind::Ambiguous:
      return "Ambiguous";
    case EntailmentKind::AntecedentImpossible:
      return "AntecedentImpossible";
  }
  return "?";
}

}  // namespace pcons
