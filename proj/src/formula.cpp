#include "pcons/formula.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

namespace pcons {

// ---------------------------------------------------------------------------
// Formula

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<Node>(Node{Connective::Atom, std::move(name), nullptr, nullptr}));
}

Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<Node>(Node{Connective::Not, {}, std::move(operand.node_), nullptr}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<Node>(Node{Connective::And, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<Node>(Node{Connective::Or, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<Node>(
      Node{Connective::Implies, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula Formula::constant(bool value) {
  return Formula(std::make_shared<Node>(
      Node{value ? Connective::True : Connective::False, {}, nullptr, nullptr}));
}

const std::string& Formula::atom_name() const {
  assert(node_->kind == Connective::Atom);
  return node_->name;
}

Formula Formula::lhs() const {
  assert(node_->lhs != nullptr);
  return Formula(node_->lhs);
}

Formula Formula::rhs() const {
  assert(node_->rhs != nullptr);
  return Formula(node_->rhs);
}

bool Formula::evaluate(const TruthAssignment& t) const {
  switch (node_->kind) {
    case Connective::Atom:
      return t.value(node_->name);
    case Connective::Not:
      return !lhs().evaluate(t);
    case Connective::And:
      return lhs().evaluate(t) && rhs().evaluate(t);
    case Connective::Or:
      return lhs().evaluate(t) || rhs().evaluate(t);
    case Connective::Implies:
      return !lhs().evaluate(t) || rhs().evaluate(t);
    case Connective::True:
      return true;
    case Connective::False:
      return false;
  }
  return false;  // unreachable
}

void Formula::collect_atoms(std::set<std::string>& out) const {
  switch (node_->kind) {
    case Connective::Atom:
      out.insert(node_->name);
      return;
    case Connective::Not:
      lhs().collect_atoms(out);
      return;
    case Connective::And:
    case Connective::Or:
    case Connective::Implies:
      lhs().collect_atoms(out);
      rhs().collect_atoms(out);
      return;
    case Connective::True:
    case Connective::False:
      return;
  }
}

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  collect_atoms(out);
  return out;
}

bool Formula::equals(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Connective::Atom:
      return node_->name == other.node_->name;
    case Connective::True:
    case Connective::False:
      return true;
    case Connective::Not:
      return lhs().equals(other.lhs());
    case Connective::And:
    case Connective::Or:
    case Connective::Implies:
      return lhs().equals(other.lhs()) && rhs().equals(other.rhs());
  }
  return false;
}

namespace {

// Binding strength; parentheses are required exactly where a child binds
// looser than its context demands.
int precedence(Connective kind) {
  switch (kind) {
    case Connective::Implies:
      return 1;
    case Connective::Or:
      return 2;
    case Connective::And:
      return 3;
    case Connective::Not:
      return 4;
    default:
      return 5;
  }
}

}  // namespace

std::string Formula::to_string() const {
  const int self = precedence(kind());
  std::string out;
  switch (kind()) {
    case Connective::Atom:
      return atom_name();
    case Connective::True:
      return "true";
    case Connective::False:
      return "false";
    case Connective::Not: {
      std::string inner = lhs().to_string();
      if (precedence(lhs().kind()) < self) inner = "(" + inner + ")";
      return "~" + inner;
    }
    case Connective::And:
    case Connective::Or:
    case Connective::Implies: {
      // Left associative except material implication, which associates to
      // the right; the disfavored side needs parentheses at equal strength.
      const bool right_assoc = kind() == Connective::Implies;
      std::string left = lhs().to_string();
      std::string right = rhs().to_string();
      if (precedence(lhs().kind()) < (right_assoc ? self + 1 : self)) left = "(" + left + ")";
      if (precedence(rhs().kind()) < (right_assoc ? self : self + 1)) right = "(" + right + ")";
      const char* op = kind() == Connective::And ? " & " : kind() == Connective::Or ? " | " : " > ";
      return left + op + right;
    }
  }
  return out;  // unreachable
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class TokKind { AtomName, True, False, Not, And, Or, Implies, LParen, RParen, End };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    switch (c) {
      case '~':
      case '!':
        tokens.push_back({TokKind::Not, std::string(1, c), i++});
        continue;
      case '&':
        tokens.push_back({TokKind::And, "&", i++});
        continue;
      case '|':
        tokens.push_back({TokKind::Or, "|", i++});
        continue;
      case '>':
        tokens.push_back({TokKind::Implies, ">", i++});
        continue;
      case '(':
        tokens.push_back({TokKind::LParen, "(", i++});
        continue;
      case ')':
        tokens.push_back({TokKind::RParen, ")", i++});
        continue;
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        ++i;
      }
      std::string word(text.substr(start, i - start));
      if (word == "true") {
        tokens.push_back({TokKind::True, std::move(word), start});
      } else if (word == "false") {
        tokens.push_back({TokKind::False, std::move(word), start});
      } else {
        tokens.push_back({TokKind::AtomName, std::move(word), start});
      }
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  tokens.push_back({TokKind::End, "", text.size()});
  return tokens;
}

class FormulaParser {
 public:
  explicit FormulaParser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse() {
    Formula f = implication();
    if (peek().kind != TokKind::End) fail("unexpected trailing input");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    if (t.kind == TokKind::End) throw ParseError(what + ", got end of input", t.pos);
    throw ParseError(what + ", got '" + t.text + "'", t.pos);
  }

  Formula implication() {
    Formula left = disjunction();
    if (peek().kind == TokKind::Implies) {
      advance();
      return Formula::implication(std::move(left), implication());
    }
    return left;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (peek().kind == TokKind::Or) {
      advance();
      f = Formula::disjunction(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (peek().kind == TokKind::And) {
      advance();
      f = Formula::conjunction(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    switch (peek().kind) {
      case TokKind::Not:
        advance();
        return Formula::negation(unary());
      case TokKind::AtomName:
        return Formula::atom(advance().text);
      case TokKind::True:
        advance();
        return Formula::constant(true);
      case TokKind::False:
        advance();
        return Formula::constant(false);
      case TokKind::LParen: {
        advance();
        Formula f = implication();
        if (peek().kind != TokKind::RParen) fail("expected ')'");
        advance();
        return f;
      }
      default:
        fail("expected a formula");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  return FormulaParser(lex(text)).parse();
}

// ---------------------------------------------------------------------------
// TruthAssignment

TruthAssignment TruthAssignment::all_false(std::span<const std::string> universe) {
  TruthAssignment t;
  for (const auto& name : universe) t.values_[name] = false;
  return t;
}

bool TruthAssignment::value(const std::string& atom) const {
  auto it = values_.find(atom);
  if (it == values_.end()) throw UnknownAtomError(atom);
  return it->second;
}

TruthAssignment TruthAssignment::completed(std::span<const std::string> universe) const {
  TruthAssignment t = *this;
  for (const auto& name : universe) t.values_.emplace(name, false);
  return t;
}

std::string TruthAssignment::to_string() const {
  std::string out;
  for (const auto& [name, v] : values_) {
    if (!out.empty()) out += ' ';
    out += name + "=" + (v ? "1" : "0");
  }
  return out;
}

// ---------------------------------------------------------------------------
// ClauseSet

int ClauseSet::add_variable(const std::string& name) {
  auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  const int var = variable_count();
  names_.emplace_back(name);
  index_.emplace(name, var);
  return var;
}

int ClauseSet::add_aux_variable() {
  const int var = variable_count();
  names_.emplace_back(std::nullopt);
  return var;
}

std::optional<int> ClauseSet::find_variable(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void ClauseSet::add_clause(Clause clause) {
  for (const Literal& lit : clause) {
    if (lit.var < 0 || lit.var >= variable_count()) {
      throw ContractViolation("clause literal names an unregistered variable");
    }
  }
  std::sort(clause.begin(), clause.end());
  clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
  for (std::size_t i = 1; i < clause.size(); ++i) {
    if (clause[i].var == clause[i - 1].var) return;  // p | ~p, always satisfied
  }
  clauses_.push_back(std::move(clause));
}

TruthAssignment ClauseSet::project(const std::vector<bool>& model) const {
  TruthAssignment t;
  for (int var = 0; var < variable_count(); ++var) {
    if (names_[var]) t.set(*names_[var], model[var]);
  }
  return t;
}

bool is_horn(const ClauseSet& cs) {
  for (const Clause& clause : cs.clauses()) {
    int positive = 0;
    for (const Literal& lit : clause) {
      if (lit.positive && ++positive > 1) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Clause transformation

namespace {

// Rewrites the constants away; the result is either a constant or
// constant-free.
Formula eliminate_constants(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom:
    case Connective::True:
    case Connective::False:
      return f;
    case Connective::Not: {
      Formula a = eliminate_constants(f.lhs());
      if (a.kind() == Connective::True) return Formula::constant(false);
      if (a.kind() == Connective::False) return Formula::constant(true);
      return Formula::negation(std::move(a));
    }
    case Connective::And: {
      Formula a = eliminate_constants(f.lhs());
      Formula b = eliminate_constants(f.rhs());
      if (a.kind() == Connective::False || b.kind() == Connective::False)
        return Formula::constant(false);
      if (a.kind() == Connective::True) return b;
      if (b.kind() == Connective::True) return a;
      return Formula::conjunction(std::move(a), std::move(b));
    }
    case Connective::Or: {
      Formula a = eliminate_constants(f.lhs());
      Formula b = eliminate_constants(f.rhs());
      if (a.kind() == Connective::True || b.kind() == Connective::True)
        return Formula::constant(true);
      if (a.kind() == Connective::False) return b;
      if (b.kind() == Connective::False) return a;
      return Formula::disjunction(std::move(a), std::move(b));
    }
    case Connective::Implies: {
      Formula a = eliminate_constants(f.lhs());
      Formula b = eliminate_constants(f.rhs());
      if (a.kind() == Connective::False || b.kind() == Connective::True)
        return Formula::constant(true);
      if (a.kind() == Connective::True) return b;
      if (b.kind() == Connective::False) {
        if (a.kind() == Connective::True) return Formula::constant(false);
        return Formula::negation(std::move(a));
      }
      return Formula::implication(std::move(a), std::move(b));
    }
  }
  return f;  // unreachable
}

void collect_conjuncts(const Formula& f, std::vector<Formula>& out) {
  if (f.kind() == Connective::And) {
    collect_conjuncts(f.lhs(), out);
    collect_conjuncts(f.rhs(), out);
  } else {
    out.push_back(f);
  }
}

// Reads `f` (negated when `negated`) as a disjunction of literals,
// accumulating into `out`. Fails on any subtree that is not clausal.
bool collect_clause_literals(const Formula& f, bool negated, ClauseSet& cs, Clause& out) {
  switch (f.kind()) {
    case Connective::Atom:
      out.push_back({cs.add_variable(f.atom_name()), !negated});
      return true;
    case Connective::Not:
      return collect_clause_literals(f.lhs(), !negated, cs, out);
    case Connective::Or:
      if (negated) return false;
      return collect_clause_literals(f.lhs(), false, cs, out) &&
             collect_clause_literals(f.rhs(), false, cs, out);
    case Connective::And:
      if (!negated) return false;
      return collect_clause_literals(f.lhs(), true, cs, out) &&
             collect_clause_literals(f.rhs(), true, cs, out);
    case Connective::Implies:
      if (negated) return false;
      return collect_clause_literals(f.lhs(), true, cs, out) &&
             collect_clause_literals(f.rhs(), false, cs, out);
    default:
      return false;  // constants were eliminated beforehand
  }
}

Literal negated(Literal lit) { return {lit.var, !lit.positive}; }

// Definition variables carry their subformula in one direction only: the
// polarity the occurrence is actually used in. That halves the clauses and
// every model still projects onto a model of the source formula.
Literal encode(const Formula& f, bool positive, ClauseSet& cs) {
  switch (f.kind()) {
    case Connective::Atom:
      return {cs.add_variable(f.atom_name()), true};
    case Connective::Not:
      return negated(encode(f.lhs(), !positive, cs));
    case Connective::Or: {
      Literal a = encode(f.lhs(), positive, cs);
      Literal b = encode(f.rhs(), positive, cs);
      Literal x{cs.add_aux_variable(), true};
      if (positive) {
        cs.add_clause({negated(x), a, b});
      } else {
        cs.add_clause({x, negated(a)});
        cs.add_clause({x, negated(b)});
      }
      return x;
    }
    case Connective::And: {
      Literal a = encode(f.lhs(), positive, cs);
      Literal b = encode(f.rhs(), positive, cs);
      Literal x{cs.add_aux_variable(), true};
      if (positive) {
        cs.add_clause({negated(x), a});
        cs.add_clause({negated(x), b});
      } else {
        cs.add_clause({x, negated(a), negated(b)});
      }
      return x;
    }
    case Connective::Implies: {
      Literal a = encode(f.lhs(), !positive, cs);
      Literal b = encode(f.rhs(), positive, cs);
      Literal x{cs.add_aux_variable(), true};
      if (positive) {
        cs.add_clause({negated(x), negated(a), b});
      } else {
        cs.add_clause({x, a});
        cs.add_clause({x, negated(b)});
      }
      return x;
    }
    default:
      assert(false && "constants survive into the encoder");
      return {0, true};
  }
}

}  // namespace

ClauseSet to_clauses(const Formula& f) {
  ClauseSet cs;
  for (const auto& name : f.atoms()) cs.add_variable(name);

  Formula g = eliminate_constants(f);
  if (g.kind() == Connective::True) return cs;
  if (g.kind() == Connective::False) {
    cs.add_clause({});
    return cs;
  }

  std::vector<Formula> conjuncts;
  collect_conjuncts(g, conjuncts);
  for (const Formula& conjunct : conjuncts) {
    Clause clause;
    if (collect_clause_literals(conjunct, false, cs, clause)) {
      cs.add_clause(std::move(clause));
    } else {
      cs.add_clause({encode(conjunct, true, cs)});
    }
  }
  return cs;
}

}  // namespace pcons
