#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcons/consistency.hpp"
#include "pcons/kb.hpp"

namespace pcons {

// Exact rational arithmetic throughout: "probability one" is an equality
// test, not a float comparison.
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q" or a bare integer; the denominator must be positive.
Rational parse_rational(std::string_view text);
// "p/q", or just "p" for integers.
std::string rational_to_string(const Rational& r);

// Finitely many weighted truth assignments over a shared universe.
// Weights are nonnegative exact rationals summing to exactly one.
class ProbabilityModel {
 public:
  using Point = std::pair<TruthAssignment, Rational>;

  ProbabilityModel(std::vector<Point> points, std::vector<std::string> universe);

  const std::vector<Point>& points() const { return points_; }
  const std::vector<std::string>& universe() const { return universe_; }

 private:
  std::vector<Point> points_;
  std::vector<std::string> universe_;
};

// The probability of a conditional: weight where it is verified divided
// by weight where its antecedent holds. Throws ImproperModelError when
// the antecedent has weight zero.
Rational conditional_probability(const ProbabilityModel& m, const Conditional& x);

// True iff every sentence's antecedent carries positive weight, so every
// conditional probability over the base is defined.
bool is_proper(const ProbabilityModel& m, const KnowledgeBase& kb);

// 1 - conditional_probability(m, x).
Rational uncertainty(const ProbabilityModel& m, const Conditional& x);

// The single defeasible sentence summarizing a non-empty defeasible set:
// the disjunction of the antecedents, conditioning the conjunction of the
// material counterparts. Verified exactly when at least one member is
// verified and none falsified; falsified exactly when a member is.
Conditional quasi_conjunction(std::span<const Conditional> defeasibles);

// Turns a consistency certificate into an explicit model: the phase-1
// witnesses in removal order followed by the strict witnesses in id
// order receive geometrically decaying weights
//   w_i = epsilon^(i-1) * (1 - epsilon)   for i < n,
//   w_n = epsilon^(n-1),
// duplicates merged by summing. The result is proper for the source base
// and gives every defeasible sentence probability >= 1 - epsilon and
// every strict sentence probability exactly 1. Requires 0 < epsilon < 1.
ProbabilityModel build_witness_model(const ConsistencyCertificate& certificate,
                                     const Rational& epsilon);

// Serialization: each point is an atom-to-bit map plus a "p/q" weight.
std::string model_to_json_text(const ProbabilityModel& m, bool pretty = false);
ProbabilityModel model_from_json_text(std::string_view text);

}  // namespace pcons
