#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <variant>
#include <vector>

#include "pcons/kb.hpp"

namespace pcons {

// Which phase of the decision procedure got stuck: no defeasible sentence
// tolerated by the remaining set, or some strict sentence not tolerated
// by the other strict sentences.
enum class StallPhase { DefeasibleStall, StrictStall };

// Phase-1 candidate scan order. Both orders produce the same verdict;
// the removal sequence and witnesses may differ.
enum class TieBreak { AscendingId, DescendingId };

struct RemovalStep {
  int id;
  TruthAssignment witness;
};

// Replayable proof of consistency: the order in which the defeasible
// sentences were removed, each with the assignment that tolerated it
// against the set active at that step, plus one verifying assignment per
// strict sentence. All witnesses are total over the base's universe.
struct ConsistencyCertificate {
  std::vector<RemovalStep> removals;
  std::map<int, TruthAssignment> strict_witnesses;
};

// A subset of the base that is not confirmable. Not necessarily minimal;
// see minimize_core.
struct InconsistencyCore {
  std::set<int> ids;
  StallPhase phase;
};

class ConsistencyVerdict {
 public:
  static ConsistencyVerdict consistent(ConsistencyCertificate certificate) {
    return ConsistencyVerdict(std::move(certificate));
  }
  static ConsistencyVerdict inconsistent(InconsistencyCore core) {
    return ConsistencyVerdict(std::move(core));
  }

  bool is_consistent() const { return std::holds_alternative<ConsistencyCertificate>(value_); }

  const ConsistencyCertificate& certificate() const {
    if (!is_consistent()) throw ContractViolation("verdict is inconsistent, no certificate");
    return std::get<ConsistencyCertificate>(value_);
  }
  const InconsistencyCore& core() const {
    if (is_consistent()) throw ContractViolation("verdict is consistent, no core");
    return std::get<InconsistencyCore>(value_);
  }

 private:
  explicit ConsistencyVerdict(ConsistencyCertificate c) : value_(std::move(c)) {}
  explicit ConsistencyVerdict(InconsistencyCore c) : value_(std::move(c)) {}

  std::variant<ConsistencyCertificate, InconsistencyCore> value_;
};

// Two-phase decision procedure. Phase 1: while defeasible sentences
// remain, remove one tolerated by everything still active, recording the
// witness; a stall reports the active set as the core. Phase 2: every
// strict sentence must be tolerated by the other strict sentences (no
// removals); a failure reports the whole strict set. The empty base is
// consistent with an empty certificate.
//
// Phase 1 scans candidates in id order and removes the first tolerated
// one, so certificates are deterministic. At most
// |D|*(|D|+1)/2 + |S| solver calls land on `session`.
ConsistencyVerdict check_consistency(const KnowledgeBase& kb, SolverSession& session,
                                     TieBreak tie_break = TieBreak::AscendingId);
ConsistencyVerdict check_consistency(const KnowledgeBase& kb);

// Non-empty base only. With defeasible sentences present: some defeasible
// sentence is tolerated by the rest. Purely strict: every sentence is
// tolerated by the rest.
bool is_confirmable(const KnowledgeBase& kb, SolverSession& session);
bool is_confirmable(const KnowledgeBase& kb);

// Exponential reference decision: consistent iff every non-empty subset
// of the sentences is confirmable. Refuses bases larger than
// `max_sentences`.
bool brute_force_consistency(const KnowledgeBase& kb, std::size_t max_sentences = 12);

// Deletion-based shrinking of an inconsistent core: drop one sentence at
// a time, keeping the reduction only while it stays inconsistent. The
// result is inconsistency-minimal (every proper subset is consistent).
// The input ids must form an inconsistent sub-base.
std::set<int> minimize_core(const KnowledgeBase& kb, const std::set<int>& core);

}  // namespace pcons
