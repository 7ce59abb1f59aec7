#include "pcons/consistency.hpp"

#include <algorithm>

namespace pcons {

namespace {

std::set<int> ids_of(const std::vector<Conditional>& sentences) {
  std::set<int> ids;
  for (const Conditional& s : sentences) ids.insert(s.id);
  return ids;
}

std::vector<Conditional> without_index(const std::vector<Conditional>& sentences,
                                       std::size_t index) {
  std::vector<Conditional> rest;
  rest.reserve(sentences.size() - 1);
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (i != index) rest.push_back(sentences[i]);
  }
  return rest;
}

}  // namespace

ConsistencyVerdict check_consistency(const KnowledgeBase& kb, SolverSession& session,
                                     TieBreak tie_break) {
  const std::vector<std::string> universe = kb.universe();
  std::vector<Conditional> active = kb.sentences();
  ConsistencyCertificate certificate;

  // Phase 1: peel off tolerated defeasible sentences.
  for (;;) {
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (active[i].modality == Modality::Defeasible) candidates.push_back(i);
    }
    if (candidates.empty()) break;
    std::sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
      return tie_break == TieBreak::AscendingId ? active[a].id < active[b].id
                                                : active[a].id > active[b].id;
    });

    bool removed = false;
    for (const std::size_t i : candidates) {
      const std::vector<Conditional> rest = without_index(active, i);
      if (auto witness = is_tolerated(active[i], rest, session, universe)) {
        certificate.removals.push_back({active[i].id, std::move(*witness)});
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(i));
        removed = true;
        break;
      }
    }
    if (!removed) {
      return ConsistencyVerdict::inconsistent({ids_of(active), StallPhase::DefeasibleStall});
    }
  }

  // Phase 2: every strict sentence, against the other strict sentences.
  const std::vector<Conditional>& stricts = active;
  for (std::size_t i = 0; i < stricts.size(); ++i) {
    const std::vector<Conditional> rest = without_index(stricts, i);
    auto witness = is_tolerated(stricts[i], rest, session, universe);
    if (!witness) {
      return ConsistencyVerdict::inconsistent({ids_of(stricts), StallPhase::StrictStall});
    }
    certificate.strict_witnesses.emplace(stricts[i].id, std::move(*witness));
  }

  return ConsistencyVerdict::consistent(std::move(certificate));
}

ConsistencyVerdict check_consistency(const KnowledgeBase& kb) {
  SolverSession session;
  return check_consistency(kb, session);
}

bool is_confirmable(const KnowledgeBase& kb, SolverSession& session) {
  if (kb.empty()) throw ContractViolation("is_confirmable requires a non-empty base");
  const std::vector<std::string> universe = kb.universe();
  const std::vector<Conditional>& all = kb.sentences();

  bool has_defeasible = false;
  for (const Conditional& s : all) has_defeasible |= s.modality == Modality::Defeasible;

  if (has_defeasible) {
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (all[i].modality != Modality::Defeasible) continue;
      if (is_tolerated(all[i], without_index(all, i), session, universe)) return true;
    }
    return false;
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!is_tolerated(all[i], without_index(all, i), session, universe)) return false;
  }
  return true;
}

bool is_confirmable(const KnowledgeBase& kb) {
  SolverSession session;
  return is_confirmable(kb, session);
}

bool brute_force_consistency(const KnowledgeBase& kb, std::size_t max_sentences) {
  const std::size_t n = kb.size();
  if (n > max_sentences) {
    throw BoundExceededError("brute-force consistency is limited to " +
                             std::to_string(max_sentences) + " sentences, got " +
                             std::to_string(n));
  }
  SolverSession session;
  const std::vector<Conditional>& all = kb.sentences();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::set<int> ids;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) ids.insert(all[i].id);
    }
    if (!is_confirmable(kb.subset(ids), session)) return false;
  }
  return true;
}

std::set<int> minimize_core(const KnowledgeBase& kb, const std::set<int>& core) {
  if (check_consistency(kb.subset(core)).is_consistent()) {
    throw ContractViolation("minimize_core requires an inconsistent core");
  }
  // One pass suffices: consistency is closed under subsets, so a sentence
  // kept because dropping it restored consistency stays necessary as the
  // core shrinks further.
  std::set<int> current = core;
  for (const int id : core) {
    std::set<int> candidate = current;
    candidate.erase(id);
    if (candidate.empty()) continue;
    if (!check_consistency(kb.subset(candidate)).is_consistent()) current = std::move(candidate);
  }
  return current;
}

}  // namespace pcons
