#include "pcons/kb.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace pcons {

std::string Conditional::to_string() const {
  return antecedent.to_string() + (modality == Modality::Defeasible ? " -> " : " => ") +
         consequent.to_string();
}

Conditional make_defeasible(Formula antecedent, Formula consequent) {
  return Conditional{-1, std::move(antecedent), std::move(consequent), Modality::Defeasible};
}

Conditional make_strict(Formula antecedent, Formula consequent) {
  return Conditional{-1, std::move(antecedent), std::move(consequent), Modality::Strict};
}

Conditional parse_conditional(std::string_view line) {
  // '-' and '=' occur in no formula token, so the leftmost arrow is the
  // conditional connective.
  std::size_t arrow = std::string_view::npos;
  Modality modality = Modality::Defeasible;
  for (std::size_t i = 0; i + 1 < line.size(); ++i) {
    if ((line[i] == '-' || line[i] == '=') && line[i + 1] == '>') {
      arrow = i;
      modality = line[i] == '-' ? Modality::Defeasible : Modality::Strict;
      break;
    }
  }
  if (arrow == std::string_view::npos) {
    throw ParseError("expected a conditional containing '->' or '=>'", line.size());
  }
  Formula antecedent = parse_formula(line.substr(0, arrow));
  Formula consequent = Formula::constant(true);
  try {
    consequent = parse_formula(line.substr(arrow + 2));
  } catch (const ParseError& e) {
    throw ParseError(e.raw_message(), e.position() + arrow + 2);
  }
  return Conditional{-1, std::move(antecedent), std::move(consequent), modality};
}

Formula material_counterpart(const Conditional& x) {
  return Formula::implication(x.antecedent, x.consequent);
}

Conditional negate(const Conditional& x) {
  return Conditional{-1, x.antecedent, Formula::negation(x.consequent), x.modality};
}

bool verifies(const TruthAssignment& t, const Conditional& x) {
  return x.antecedent.evaluate(t) && x.consequent.evaluate(t);
}

bool falsifies(const TruthAssignment& t, const Conditional& x) {
  return x.antecedent.evaluate(t) && !x.consequent.evaluate(t);
}

// ---------------------------------------------------------------------------
// KnowledgeBase

KnowledgeBase KnowledgeBase::parse(std::string_view text) {
  KnowledgeBase kb;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_number;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
      line.remove_suffix(1);
    }
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) {
      line.remove_prefix(1);
    }
    if (line.empty()) continue;

    try {
      kb.add(parse_conditional(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_number) + ": " + e.raw_message(),
                       e.position());
    }
  }
  return kb;
}

KnowledgeBase KnowledgeBase::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open knowledge base file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

int KnowledgeBase::add(Conditional sentence) {
  int next = 1;
  for (const Conditional& existing : sentences_) next = std::max(next, existing.id + 1);
  sentence.id = next;
  sentences_.push_back(std::move(sentence));
  return next;
}

std::vector<Conditional> KnowledgeBase::defeasible() const {
  std::vector<Conditional> out;
  for (const Conditional& s : sentences_) {
    if (s.modality == Modality::Defeasible) out.push_back(s);
  }
  return out;
}

std::vector<Conditional> KnowledgeBase::strict() const {
  std::vector<Conditional> out;
  for (const Conditional& s : sentences_) {
    if (s.modality == Modality::Strict) out.push_back(s);
  }
  return out;
}

const Conditional* KnowledgeBase::find(int id) const {
  for (const Conditional& s : sentences_) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

const Conditional& KnowledgeBase::by_id(int id) const {
  if (const Conditional* s = find(id)) return *s;
  throw ContractViolation("no sentence with id " + std::to_string(id));
}

std::vector<std::string> KnowledgeBase::universe() const {
  std::set<std::string> atoms;
  for (const Conditional& s : sentences_) {
    s.antecedent.collect_atoms(atoms);
    s.consequent.collect_atoms(atoms);
  }
  return {atoms.begin(), atoms.end()};
}

KnowledgeBase KnowledgeBase::subset(const std::set<int>& ids) const {
  KnowledgeBase sub;
  for (const Conditional& s : sentences_) {
    if (ids.count(s.id)) sub.sentences_.push_back(s);
  }
  return sub;
}

KnowledgeBase KnowledgeBase::with(Conditional extra) const {
  KnowledgeBase copy = *this;
  copy.add(std::move(extra));
  return copy;
}

std::string KnowledgeBase::to_string() const {
  std::string out;
  for (const Conditional& s : sentences_) {
    out += s.to_string();
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tolerance

std::optional<TruthAssignment> is_tolerated(const Conditional& x,
                                            std::span<const Conditional> rest,
                                            SolverSession& session,
                                            std::span<const std::string> universe) {
  Formula query = Formula::conjunction(x.antecedent, x.consequent);
  for (const Conditional& r : rest) {
    query = Formula::conjunction(std::move(query), material_counterpart(r));
  }
  const ClauseSet cs = to_clauses(query);
  const SatResult result = session.solve(cs);
  if (!result.satisfiable) return std::nullopt;
  return cs.project(result.model).completed(universe);
}

std::optional<TruthAssignment> is_tolerated(const Conditional& x,
                                            std::span<const Conditional> rest) {
  SolverSession session;
  return is_tolerated(x, rest, session);
}

}  // namespace pcons
