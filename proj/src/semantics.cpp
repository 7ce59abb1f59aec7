#include "pcons/semantics.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "json.hpp"

namespace pcons {

using json = nlohmann::json;
using BigInt = boost::multiprecision::cpp_int;

Rational parse_rational(std::string_view text) {
  const auto parse_int = [&](std::string_view part, std::size_t offset) -> BigInt {
    std::string digits(part);
    if (digits.empty()) throw ParseError("expected an integer", offset);
    std::size_t i = digits[0] == '-' ? 1 : 0;
    if (i == digits.size()) throw ParseError("expected digits after '-'", offset + i);
    for (; i < digits.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
        throw ParseError(std::string("unexpected character '") + digits[i] + "' in number",
                         offset + i);
      }
    }
    return BigInt(digits);
  };

  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, 0));
  const BigInt num = parse_int(text.substr(0, slash), 0);
  const BigInt den = parse_int(text.substr(slash + 1), slash + 1);
  if (den <= 0) throw ParseError("denominator must be positive", slash + 1);
  return Rational(num) / Rational(den);
}

std::string rational_to_string(const Rational& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) out += "/" + denominator(r).str();
  return out;
}

ProbabilityModel::ProbabilityModel(std::vector<Point> points, std::vector<std::string> universe)
    : points_(std::move(points)), universe_(std::move(universe)) {
  std::sort(universe_.begin(), universe_.end());
  universe_.erase(std::unique(universe_.begin(), universe_.end()), universe_.end());

  Rational total = 0;
  for (auto& [assignment, weight] : points_) {
    if (weight < 0) throw ContractViolation("model weights must be nonnegative");
    total += weight;
    assignment = assignment.completed(universe_);
    for (const auto& [atom, _] : assignment.values()) {
      if (!std::binary_search(universe_.begin(), universe_.end(), atom)) {
        throw ContractViolation("assignment atom '" + atom + "' outside the model universe");
      }
    }
  }
  if (total != 1) {
    throw ContractViolation("model weights sum to " + rational_to_string(total) + ", expected 1");
  }
}

Rational conditional_probability(const ProbabilityModel& m, const Conditional& x) {
  Rational verified = 0;
  Rational applicable = 0;
  for (const auto& [assignment, weight] : m.points()) {
    if (!x.antecedent.evaluate(assignment)) continue;
    applicable += weight;
    if (x.consequent.evaluate(assignment)) verified += weight;
  }
  if (applicable == 0) {
    throw ImproperModelError("antecedent '" + x.antecedent.to_string() +
                             "' has probability zero");
  }
  return verified / applicable;
}

bool is_proper(const ProbabilityModel& m, const KnowledgeBase& kb) {
  for (const Conditional& sentence : kb.sentences()) {
    Rational applicable = 0;
    for (const auto& [assignment, weight] : m.points()) {
      if (sentence.antecedent.evaluate(assignment)) applicable += weight;
    }
    if (applicable == 0) return false;
  }
  return true;
}

Rational uncertainty(const ProbabilityModel& m, const Conditional& x) {
  return Rational(1) - conditional_probability(m, x);
}

Conditional quasi_conjunction(std::span<const Conditional> defeasibles) {
  if (defeasibles.empty()) {
    throw ContractViolation("quasi_conjunction requires a non-empty set");
  }
  for (const Conditional& d : defeasibles) {
    if (d.modality != Modality::Defeasible) {
      throw ContractViolation("quasi_conjunction requires defeasible sentences only");
    }
  }
  Formula antecedent = defeasibles[0].antecedent;
  Formula consequent = material_counterpart(defeasibles[0]);
  for (std::size_t i = 1; i < defeasibles.size(); ++i) {
    antecedent = Formula::disjunction(std::move(antecedent), defeasibles[i].antecedent);
    consequent = Formula::conjunction(std::move(consequent), material_counterpart(defeasibles[i]));
  }
  return make_defeasible(std::move(antecedent), std::move(consequent));
}

ProbabilityModel build_witness_model(const ConsistencyCertificate& certificate,
                                     const Rational& epsilon) {
  if (!(epsilon > 0 && epsilon < 1)) {
    throw ContractViolation("epsilon must lie strictly between 0 and 1, got " +
                            rational_to_string(epsilon));
  }

  std::vector<TruthAssignment> sequence;
  for (const RemovalStep& step : certificate.removals) sequence.push_back(step.witness);
  for (const auto& [id, witness] : certificate.strict_witnesses) sequence.push_back(witness);

  // An empty certificate (empty base) gets the one model over no atoms.
  if (sequence.empty()) {
    return ProbabilityModel({{TruthAssignment{}, Rational(1)}}, {});
  }

  std::vector<std::string> universe;
  for (const auto& [atom, _] : sequence.front().values()) universe.push_back(atom);
  for (const TruthAssignment& t : sequence) {
    if (t.universe_size() != universe.size()) {
      throw ContractViolation("certificate witnesses disagree on their universe");
    }
  }

  // Weights decay geometrically along the sequence; the tail keeps the
  // leftover mass so the total telescopes to exactly one.
  const std::size_t n = sequence.size();
  std::vector<std::pair<TruthAssignment, Rational>> points;
  std::map<TruthAssignment, std::size_t> seen;
  Rational scale = 1;  // epsilon^(i-1)
  for (std::size_t i = 0; i < n; ++i) {
    const Rational weight = (i + 1 < n) ? scale * (Rational(1) - epsilon) : scale;
    auto [it, inserted] = seen.emplace(sequence[i], points.size());
    if (inserted) {
      points.emplace_back(sequence[i], weight);
    } else {
      points[it->second].second += weight;
    }
    scale *= epsilon;
  }
  return ProbabilityModel(std::move(points), std::move(universe));
}

// ---------------------------------------------------------------------------
// Serialization

std::string model_to_json_text(const ProbabilityModel& m, bool pretty) {
  json points = json::array();
  for (const auto& [assignment, weight] : m.points()) {
    json bits = json::object();
    for (const auto& [atom, v] : assignment.values()) bits[atom] = v ? 1 : 0;
    points.push_back({{"assignment", std::move(bits)}, {"weight", rational_to_string(weight)}});
  }
  json out = {{"universe", m.universe()}, {"points", std::move(points)}};
  return pretty ? out.dump(2) : out.dump();
}

ProbabilityModel model_from_json_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid model JSON: ") + e.what(), 0);
  }
  try {
    if (j.contains("model")) j = j.at("model");  // accept the witness wrapper
    std::vector<std::string> universe = j.at("universe").get<std::vector<std::string>>();
    std::vector<ProbabilityModel::Point> points;
    for (const json& point : j.at("points")) {
      TruthAssignment t;
      for (const auto& [atom, bit] : point.at("assignment").items()) {
        t.set(atom, bit.get<int>() != 0);
      }
      points.emplace_back(std::move(t), parse_rational(point.at("weight").get<std::string>()));
    }
    return ProbabilityModel(std::move(points), std::move(universe));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed model object: ") + e.what(), 0);
  }
}

}  // namespace pcons
