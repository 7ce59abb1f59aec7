#include "pcons/semantics.hpp"

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"

using namespace pcons;
using namespace pcons::testing;

namespace {

ProbabilityModel uniform_model(const std::vector<std::string>& universe) {
  std::vector<ProbabilityModel::Point> points;
  const auto assignments = all_assignments(universe);
  for (const TruthAssignment& t : assignments) {
    points.emplace_back(t, Rational(1) / Rational(static_cast<int>(assignments.size())));
  }
  return ProbabilityModel(std::move(points), universe);
}

}  // namespace

TEST_SUITE_BEGIN("semantics");

TEST_CASE("rational round trips") {
  CHECK(parse_rational("9/100") == Rational(9) / 100);
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-1/2") == Rational(-1) / 2);
  CHECK(rational_to_string(Rational(9) / 100) == "9/100");
  CHECK(rational_to_string(Rational(1)) == "1");
  CHECK(rational_to_string(Rational(2) / 4) == "1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
}

TEST_CASE("model invariants are enforced") {
  const std::vector<std::string> ab{"a", "b"};
  CHECK_THROWS_AS(
      ProbabilityModel({{TruthAssignment{}, Rational(1) / 2}}, ab),
      ContractViolation);  // weights sum to 1/2
  CHECK_THROWS_AS(ProbabilityModel({{TruthAssignment{}, Rational(-1)},
                                    {TruthAssignment{}, Rational(2)}},
                                   ab),
                  ContractViolation);  // negative weight

  TruthAssignment stray;
  stray.set("z", true);
  CHECK_THROWS_AS(ProbabilityModel({{stray, Rational(1)}}, ab), ContractViolation);
}

TEST_CASE("conditional probability: worked cases") {
  const std::vector<std::string> ab{"a", "b"};
  const Conditional x = parse_conditional("a -> b");

  // Uniform over the four assignments: verified on one, applicable on two.
  CHECK(conditional_probability(uniform_model(ab), x) == Rational(1) / 2);

  // All weight on a=1,b=1.
  TruthAssignment both;
  both.set("a", true);
  both.set("b", true);
  CHECK(conditional_probability(ProbabilityModel({{both, Rational(1)}}, ab), x) == Rational(1));

  // All weight on a=0: the antecedent never happens.
  TruthAssignment neither;
  neither.set("a", false);
  neither.set("b", false);
  const ProbabilityModel improper({{neither, Rational(1)}}, ab);
  CHECK_THROWS_AS(conditional_probability(improper, x), ImproperModelError);
  CHECK(!is_proper(improper, KnowledgeBase::parse("a -> b\n")));
  CHECK(is_proper(improper, KnowledgeBase{}));
}

TEST_CASE("probabilities of a conditional and its negation are complementary") {
  Rng rng(2718);
  const std::vector<std::string> atoms{"a", "b", "c"};
  for (int round = 0; round < 100; ++round) {
    const ProbabilityModel m = random_full_support_model(rng, atoms);
    Conditional x = random_conditional(rng, atoms, 2);
    if (!formula_satisfiable_oracle(x.antecedent)) continue;
    const Rational p = conditional_probability(m, x);
    const Rational q = conditional_probability(m, negate(x));
    REQUIRE(p + q == Rational(1));
    REQUIRE(uncertainty(m, x) + uncertainty(m, negate(x)) == Rational(1));
  }
}

TEST_CASE("uncertainty is the complement") {
  const std::vector<std::string> ab{"a", "b"};
  const ProbabilityModel m = uniform_model(ab);
  const Conditional x = parse_conditional("a -> b");
  CHECK(uncertainty(m, x) == Rational(1) / 2);
  CHECK(uncertainty(m, parse_conditional("a -> a")) == Rational(0));
}

TEST_CASE("quasi-conjunction shape") {
  const std::vector<Conditional> pair{parse_conditional("a -> b"), parse_conditional("c -> d")};
  const Conditional c = quasi_conjunction(pair);
  CHECK(c.modality == Modality::Defeasible);
  CHECK(c.antecedent == parse_formula("a | c"));
  CHECK(c.consequent == parse_formula("(a > b) & (c > d)"));

  const std::vector<Conditional> one{parse_conditional("a -> b")};
  const Conditional single = quasi_conjunction(one);
  CHECK(single.antecedent == Formula::atom("a"));
  CHECK(single.consequent == parse_formula("a > b"));
  // Verified and falsified by exactly the same assignments as a -> b.
  const std::vector<std::string> ab{"a", "b"};
  for (const TruthAssignment& t : all_assignments(ab)) {
    CHECK(verifies(t, single) == verifies(t, one[0]));
    CHECK(falsifies(t, single) == falsifies(t, one[0]));
  }

  CHECK_THROWS_AS(quasi_conjunction({}), ContractViolation);
  const std::vector<Conditional> mixed{parse_conditional("a -> b"), parse_conditional("c => d")};
  CHECK_THROWS_AS(quasi_conjunction(mixed), ContractViolation);
}

TEST_CASE("quasi-conjunction verification matches the membership criterion") {
  const std::vector<std::string> atoms{"a", "b", "c", "d"};
  const std::vector<Conditional> pair{parse_conditional("a -> b"), parse_conditional("c -> d")};
  const Conditional qc = quasi_conjunction(pair);
  for (const TruthAssignment& t : all_assignments(atoms)) {
    const bool some_verified = verifies(t, pair[0]) || verifies(t, pair[1]);
    const bool some_falsified = falsifies(t, pair[0]) || falsifies(t, pair[1]);
    CHECK(verifies(t, qc) == (some_verified && !some_falsified));
    CHECK(falsifies(t, qc) == some_falsified);
  }

  Rng rng(55555);
  for (int round = 0; round < 100; ++round) {
    std::vector<Conditional> ds;
    for (int i = 0, k = pick(rng, 1, 3); i < k; ++i) {
      Conditional d = random_conditional(rng, atoms, 2);
      d.modality = Modality::Defeasible;
      ds.push_back(std::move(d));
    }
    const Conditional c = quasi_conjunction(ds);
    for (const TruthAssignment& t : all_assignments(atoms)) {
      bool some_verified = false;
      bool some_falsified = false;
      for (const Conditional& d : ds) {
        some_verified |= verifies(t, d);
        some_falsified |= falsifies(t, d);
      }
      REQUIRE(verifies(t, c) == (some_verified && !some_falsified));
      REQUIRE(falsifies(t, c) == some_falsified);
    }
  }
}

TEST_CASE("uncertainty of the quasi-conjunction is subadditive") {
  Rng rng(9876);
  const std::vector<std::string> atoms{"a", "b", "c", "d"};
  int valid = 0;
  while (valid < 120) {
    const ProbabilityModel m = random_full_support_model(rng, atoms);
    std::vector<Conditional> ds;
    bool defined = true;
    for (int i = 0, k = pick(rng, 1, 3); i < k; ++i) {
      Conditional d = random_conditional(rng, atoms, 2);
      d.modality = Modality::Defeasible;
      defined &= formula_satisfiable_oracle(d.antecedent);
      ds.push_back(std::move(d));
    }
    if (!defined) continue;
    Rational total = 0;
    for (const Conditional& d : ds) total += uncertainty(m, d);
    REQUIRE(uncertainty(m, quasi_conjunction(ds)) <= total);
    ++valid;
  }
}

TEST_CASE("witness model for the softened penguin base") {
  const KnowledgeBase kb = KnowledgeBase::parse("b -> f\np -> b\np -> ~f\n");
  const ConsistencyVerdict verdict = check_consistency(kb);
  REQUIRE(verdict.is_consistent());

  const ProbabilityModel m = build_witness_model(verdict.certificate(), Rational(1) / 10);
  REQUIRE(m.points().size() == 3);
  CHECK(m.points()[0].second == Rational(9) / 10);
  CHECK(m.points()[1].second == Rational(9) / 100);
  CHECK(m.points()[2].second == Rational(1) / 100);

  // Frozen from evaluating the weighted sums by hand.
  CHECK(conditional_probability(m, kb.by_id(1)) == Rational(10) / 11);
  CHECK(conditional_probability(m, kb.by_id(2)) == Rational(9) / 10);
  CHECK(conditional_probability(m, kb.by_id(3)) == Rational(1));
  for (const Conditional& s : kb.sentences()) {
    CHECK(conditional_probability(m, s) >= Rational(9) / 10);
  }
  CHECK(is_proper(m, kb));
}

TEST_CASE("witness model for a single strict sentence is one point of weight one") {
  const KnowledgeBase kb = KnowledgeBase::parse("a => a\n");
  const ConsistencyVerdict verdict = check_consistency(kb);
  REQUIRE(verdict.is_consistent());
  for (const Rational& eps : {Rational(1) / 10, Rational(1) / 3}) {
    const ProbabilityModel m = build_witness_model(verdict.certificate(), eps);
    REQUIRE(m.points().size() == 1);
    CHECK(m.points()[0].second == Rational(1));
    CHECK(m.points()[0].first.value("a") == true);
    CHECK(conditional_probability(m, kb.by_id(1)) == Rational(1));
  }
}

TEST_CASE("witness construction guards its margin") {
  const KnowledgeBase kb = KnowledgeBase::parse("a -> b\n");
  const ConsistencyCertificate cert = check_consistency(kb).certificate();
  CHECK_THROWS_AS(build_witness_model(cert, Rational(0)), ContractViolation);
  CHECK_THROWS_AS(build_witness_model(cert, Rational(1)), ContractViolation);
  CHECK_THROWS_AS(build_witness_model(cert, Rational(3) / 2), ContractViolation);
}

TEST_CASE("witness models satisfy the margin on random consistent bases") {
  Rng rng(777);
  int consistent = 0;
  while (consistent < 60) {
    const KnowledgeBase kb = random_kb(rng, abc_atoms(), 4);
    const ConsistencyVerdict verdict = check_consistency(kb);
    if (!verdict.is_consistent()) continue;
    ++consistent;
    for (const Rational& eps : {Rational(1) / 10, Rational(1) / 100}) {
      const ProbabilityModel m = build_witness_model(verdict.certificate(), eps);
      Rational total = 0;
      for (const auto& [t, w] : m.points()) total += w;
      REQUIRE(total == Rational(1));
      REQUIRE(is_proper(m, kb));
      for (const Conditional& s : kb.sentences()) {
        const Rational p = conditional_probability(m, s);
        CAPTURE(kb.to_string());
        CAPTURE(s.to_string());
        if (s.modality == Modality::Strict) {
          REQUIRE(p == Rational(1));
        } else {
          REQUIRE(p >= Rational(1) - eps);
        }
      }
    }
  }
}

TEST_CASE("model serialization round trips") {
  const KnowledgeBase kb = KnowledgeBase::parse("b -> f\np -> b\np -> ~f\n");
  const ProbabilityModel m =
      build_witness_model(check_consistency(kb).certificate(), Rational(1) / 10);
  const std::string text = model_to_json_text(m, /*pretty=*/true);
  const ProbabilityModel back = model_from_json_text(text);
  REQUIRE(back.points().size() == m.points().size());
  CHECK(back.universe() == m.universe());
  for (std::size_t i = 0; i < m.points().size(); ++i) {
    CHECK(back.points()[i].first == m.points()[i].first);
    CHECK(back.points()[i].second == m.points()[i].second);
  }
  CHECK_THROWS_AS(model_from_json_text("not json"), ParseError);
  CHECK_THROWS_AS(model_from_json_text("{\"universe\": []}"), ParseError);
}

TEST_SUITE_END();
