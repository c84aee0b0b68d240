#include "mtlmon/speclang.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <utility>

#include "mtlmon/canonical.hpp"
#include "mtlmon/errors.hpp"

namespace mtlmon {

std::string_view to_string(RequirementClass cls) {
  switch (cls) {
    case RequirementClass::Limit:
      return "limit";
    case RequirementClass::TimedOrder:
      return "timed_order";
    case RequirementClass::DelayedOrder:
      return "delayed_order";
    case RequirementClass::General:
      return "general";
  }
  return "general";
}

RequirementSet::RequirementSet(std::map<std::string, Predicate> predicates,
                               std::vector<Requirement> requirements)
    : predicates_(std::move(predicates)),
      requirements_(std::move(requirements)) {}

const Requirement* RequirementSet::find(std::string_view name) const {
  for (const Requirement& r : requirements_) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

AtomValuation RequirementSet::valuation() const {
  // Owns a copy so the closure stays valid independent of this set.
  auto predicates = std::make_shared<std::map<std::string, Predicate>>(
      predicates_);
  return [predicates](const std::string& atom, const TimedState& state) {
    auto it = predicates->find(atom);
    if (it == predicates->end()) throw UnboundPropositionError(atom);
    return eval_predicate(it->second, state);
  };
}

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class TokKind { Ident, Number, Punct, End };

struct Token {
  TokKind kind = TokKind::End;
  std::string_view text;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t offset = 0;
};

const std::set<std::string_view> kReserved = {
    "prop", "req", "in", "inf", "true", "false",
    "xor",  "timedTrigger", "X", "F", "G", "U"};

bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
bool digit(char c) { return c >= '0' && c <= '9'; }

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](TokKind kind, std::size_t start, std::size_t len) {
    tokens.push_back(Token{kind, text.substr(start, len), line,
                           col - (i - start), start});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    if (c == '#') {  // comment to end of line
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    std::size_t start = i;
    if (ident_start(c)) {
      while (i < text.size() && ident_char(text[i])) {
        ++i;
        ++col;
      }
      push(TokKind::Ident, start, i - start);
      continue;
    }
    if (digit(c) || (c == '-' && i + 1 < text.size() && digit(text[i + 1]))) {
      bool seen_dot = false;
      if (c == '-') {
        ++i;
        ++col;
      }
      while (i < text.size() &&
             (digit(text[i]) || (text[i] == '.' && !seen_dot))) {
        seen_dot = seen_dot || text[i] == '.';
        ++i;
        ++col;
      }
      push(TokKind::Number, start, i - start);
      continue;
    }
    auto two = text.substr(i, 2);
    if (two == ":=" || two == "<=" || two == ">=" || two == "==" ||
        two == "!=" || two == "->") {
      i += 2;
      col += 2;
      push(TokKind::Punct, start, 2);
      continue;
    }
    if (std::string_view("();[],<>=!&|").find(c) != std::string_view::npos) {
      ++i;
      ++col;
      push(TokKind::Punct, start, 1);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line,
                     col);
  }
  tokens.push_back(Token{TokKind::End, {}, line, col, text.size()});
  return tokens;
}

// ---------------------------------------------------------------------------
// Surface syntax tree, kept only long enough to classify and desugar.

struct Ast {
  enum class Kind {
    True, False, Atom, Not, And, Or, Xor, Implies,
    Next, Finally, Globally, Until, TimedTrigger
  };
  Kind kind = Kind::True;
  std::string name;
  Interval interval;
  std::vector<Ast> children;
};

Formula desugar(const Ast& ast) {
  using K = Ast::Kind;
  switch (ast.kind) {
    case K::True:
      return Formula::truth();
    case K::False:
      return Formula::falsity();
    case K::Atom:
      return Formula::atom(ast.name);
    case K::Not:
      return make_not(desugar(ast.children[0]));
    case K::And:
      return Formula::and_of(
          {desugar(ast.children[0]), desugar(ast.children[1])});
    case K::Or:
      return make_or({desugar(ast.children[0]), desugar(ast.children[1])});
    case K::Xor:
      return Formula::xor_of(
          {desugar(ast.children[0]), desugar(ast.children[1])});
    case K::Implies:
      return make_implies(desugar(ast.children[0]), desugar(ast.children[1]));
    case K::Next:
      return Formula::next(ast.interval, desugar(ast.children[0]));
    case K::Finally:
      return make_finally(ast.interval, desugar(ast.children[0]));
    case K::Globally:
      return make_globally(ast.interval, desugar(ast.children[0]));
    case K::Until:
      return Formula::until(ast.interval, desugar(ast.children[0]),
                            desugar(ast.children[1]));
    case K::TimedTrigger:
      return timed_trigger(ast.interval, desugar(ast.children[0]),
                           desugar(ast.children[1]));
  }
  return Formula::truth();
}

bool is_atom_trigger(const Ast& ast) {
  return ast.kind == Ast::Kind::TimedTrigger &&
         ast.children[0].kind == Ast::Kind::Atom &&
         ast.children[1].kind == Ast::Kind::Atom;
}

RequirementClass classify(const Ast& ast) {
  using K = Ast::Kind;
  if (ast.kind == K::Globally && ast.interval == Interval::zero_to_inf() &&
      ast.children[0].kind == K::Atom) {
    return RequirementClass::Limit;
  }
  if (is_atom_trigger(ast) && ast.interval.lower == 0.0 &&
      ast.interval.lower_closed) {
    return RequirementClass::TimedOrder;
  }
  if (ast.kind == K::And) {
    const Ast* negated = nullptr;
    const Ast* plain = nullptr;
    for (const Ast& c : ast.children) {
      if (c.kind == K::Not && is_atom_trigger(c.children[0])) {
        negated = &c.children[0];
      } else if (is_atom_trigger(c)) {
        plain = &c;
      }
    }
    if (negated && plain) {
      const Interval& early = negated->interval;
      const Interval& late = plain->interval;
      bool windows_chain = early.lower == 0.0 && early.lower_closed &&
                           !early.upper_unbounded() && early.upper_closed &&
                           !late.upper_unbounded() &&
                           late.lower == early.upper;
      bool same_args =
          negated->children[0].name == plain->children[0].name &&
          negated->children[1].name == plain->children[1].name;
      if (windows_chain && same_args) return RequirementClass::DelayedOrder;
    }
  }
  return RequirementClass::General;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::string_view text)
      : text_(text), tokens_(lex(text)) {}

  RequirementSet parse_spec();
  Ast parse_formula_only();

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& get() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg, const Token& tok) const {
    throw ParseError(msg, tok.line, tok.column);
  }

  bool accept_punct(std::string_view p) {
    if (peek().kind == TokKind::Punct && peek().text == p) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_keyword(std::string_view kw) {
    if (peek().kind == TokKind::Ident && peek().text == kw) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_punct(std::string_view p) {
    if (!accept_punct(p)) {
      fail("expected '" + std::string(p) + "'", peek());
    }
  }

  std::string expect_name(const char* what) {
    const Token& tok = peek();
    if (tok.kind != TokKind::Ident) fail(std::string("expected ") + what, tok);
    if (kReserved.count(tok.text)) {
      fail("'" + std::string(tok.text) + "' is a reserved word", tok);
    }
    ++pos_;
    return std::string(tok.text);
  }

  double expect_number() {
    const Token& tok = peek();
    if (tok.kind != TokKind::Number) fail("expected a number", tok);
    double v = 0.0;
    auto res =
        std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
    if (res.ec != std::errc{}) fail("unparseable number", tok);
    ++pos_;
    return v;
  }

  Interval parse_interval();
  Interval optional_interval() {
    if (peek().kind == TokKind::Punct &&
        (peek().text == "[" || peek().text == "(")) {
      return parse_interval();
    }
    return Interval::zero_to_inf();
  }

  Ast parse_expr() { return parse_implies(); }
  Ast parse_implies();
  Ast parse_or();
  Ast parse_xor();
  Ast parse_and();
  Ast parse_until();
  Ast parse_unary();
  Ast parse_primary();

  Predicate parse_predicate();

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

Interval Parser::parse_interval() {
  const Token& open = get();  // '[' or '(' guaranteed by caller
  bool lower_closed = open.text == "[";
  const Token& lo_tok = peek();
  double lo = expect_number();
  if (lo < 0) fail("interval lower bound must be non-negative", lo_tok);
  expect_punct(",");
  double hi = 0.0;
  const Token& hi_tok = peek();
  if (accept_keyword("inf")) {
    hi = Interval::infinity();
  } else {
    hi = expect_number();
    if (hi < 0) fail("interval upper bound must be non-negative", hi_tok);
  }
  bool upper_closed;
  if (accept_punct("]")) {
    upper_closed = true;
  } else if (accept_punct(")")) {
    upper_closed = false;
  } else {
    fail("expected ']' or ')'", peek());
  }
  try {
    return Interval::make(lo, lower_closed, hi, upper_closed);
  } catch (const IntervalError& e) {
    fail(std::string("malformed interval literal: ") + e.what(), open);
  }
}

Ast Parser::parse_implies() {
  Ast left = parse_or();
  if (accept_punct("->")) {
    Ast right = parse_implies();
    Ast node;
    node.kind = Ast::Kind::Implies;
    node.children.push_back(std::move(left));
    node.children.push_back(std::move(right));
    return node;
  }
  return left;
}

Ast Parser::parse_or() {
  Ast left = parse_xor();
  if (accept_punct("|")) {
    Ast right = parse_or();
    Ast node;
    node.kind = Ast::Kind::Or;
    node.children.push_back(std::move(left));
    node.children.push_back(std::move(right));
    return node;
  }
  return left;
}

Ast Parser::parse_xor() {
  Ast left = parse_and();
  if (accept_keyword("xor")) {
    Ast right = parse_xor();
    Ast node;
    node.kind = Ast::Kind::Xor;
    node.children.push_back(std::move(left));
    node.children.push_back(std::move(right));
    return node;
  }
  return left;
}

Ast Parser::parse_and() {
  Ast left = parse_until();
  if (accept_punct("&")) {
    Ast right = parse_and();
    Ast node;
    node.kind = Ast::Kind::And;
    node.children.push_back(std::move(left));
    node.children.push_back(std::move(right));
    return node;
  }
  return left;
}

Ast Parser::parse_until() {
  Ast left = parse_unary();
  if (accept_keyword("U")) {
    Ast node;
    node.kind = Ast::Kind::Until;
    node.interval = optional_interval();
    Ast right = parse_until();
    node.children.push_back(std::move(left));
    node.children.push_back(std::move(right));
    return node;
  }
  return left;
}

Ast Parser::parse_unary() {
  if (accept_punct("!")) {
    Ast node;
    node.kind = Ast::Kind::Not;
    node.children.push_back(parse_unary());
    return node;
  }
  for (auto [kw, kind] : {std::pair{"X", Ast::Kind::Next},
                          std::pair{"F", Ast::Kind::Finally},
                          std::pair{"G", Ast::Kind::Globally}}) {
    if (accept_keyword(kw)) {
      Ast node;
      node.kind = kind;
      node.interval = optional_interval();
      node.children.push_back(parse_unary());
      return node;
    }
  }
  return parse_primary();
}

Ast Parser::parse_primary() {
  if (accept_punct("(")) {
    Ast inner = parse_expr();
    expect_punct(")");
    return inner;
  }
  if (accept_keyword("true")) {
    Ast node;
    node.kind = Ast::Kind::True;
    return node;
  }
  if (accept_keyword("false")) {
    Ast node;
    node.kind = Ast::Kind::False;
    return node;
  }
  if (accept_keyword("timedTrigger")) {
    Ast node;
    node.kind = Ast::Kind::TimedTrigger;
    node.interval = optional_interval();
    expect_punct("(");
    node.children.push_back(parse_expr());
    expect_punct(",");
    node.children.push_back(parse_expr());
    expect_punct(")");
    return node;
  }
  Ast node;
  node.kind = Ast::Kind::Atom;
  node.name = expect_name("a proposition name or formula");
  return node;
}

Predicate Parser::parse_predicate() {
  std::string var = expect_name("a variable name");
  if (accept_keyword("in")) {
    if (peek().kind != TokKind::Punct ||
        (peek().text != "[" && peek().text != "(")) {
      fail("expected an interval after 'in'", peek());
    }
    return Predicate::in_range(std::move(var), parse_interval());
  }
  const Token& op = peek();
  if (op.kind != TokKind::Punct) fail("expected a relational operator", op);
  std::string_view rel = op.text;
  ++pos_;
  if (rel == "=" || rel == "==" || rel == "!=") {
    if (accept_keyword("true")) {
      return Predicate::boolean(std::move(var), rel != "!=", true);
    }
    if (accept_keyword("false")) {
      return Predicate::boolean(std::move(var), rel != "!=", false);
    }
    if (rel == "=") fail("'=' compares against true/false only", peek());
  }
  double threshold = expect_number();
  Relation relation;
  if (rel == "<") {
    relation = Relation::Lt;
  } else if (rel == "<=") {
    relation = Relation::Le;
  } else if (rel == ">") {
    relation = Relation::Gt;
  } else if (rel == ">=") {
    relation = Relation::Ge;
  } else if (rel == "==") {
    relation = Relation::Eq;
  } else if (rel == "!=") {
    relation = Relation::Ne;
  } else {
    fail("unknown relational operator '" + std::string(rel) + "'", op);
  }
  return Predicate::numeric(std::move(var), relation, threshold);
}

RequirementSet Parser::parse_spec() {
  std::map<std::string, Predicate> predicates;
  std::vector<Requirement> requirements;
  std::set<std::string> requirement_names;
  std::vector<Token> requirement_sites;

  while (peek().kind != TokKind::End) {
    if (accept_keyword("prop")) {
      const Token& name_tok = peek();
      std::string name = expect_name("a proposition name");
      expect_punct(":=");
      Predicate pred = parse_predicate();
      expect_punct(";");
      if (!predicates.emplace(name, std::move(pred)).second) {
        fail("duplicate proposition name '" + name + "'", name_tok);
      }
    } else if (accept_keyword("req")) {
      const Token& name_tok = peek();
      std::string name = expect_name("a requirement name");
      expect_punct(":=");
      std::size_t body_begin = peek().offset;
      Ast ast = parse_expr();
      std::size_t body_end = peek().offset;
      expect_punct(";");
      if (!requirement_names.insert(name).second) {
        fail("duplicate requirement name '" + name + "'", name_tok);
      }
      Requirement req;
      req.name = std::move(name);
      req.cls = classify(ast);
      req.formula = canonicalize(desugar(ast));
      std::string_view src = text_.substr(body_begin, body_end - body_begin);
      while (!src.empty() && (src.back() == ' ' || src.back() == '\t' ||
                              src.back() == '\n' || src.back() == '\r')) {
        src.remove_suffix(1);
      }
      req.source_text = std::string(src);
      requirements.push_back(std::move(req));
      requirement_sites.push_back(name_tok);
    } else {
      fail("expected 'prop' or 'req'", peek());
    }
  }

  // All atoms must be bound; definitions may appear in any order.
  for (std::size_t r = 0; r < requirements.size(); ++r) {
    std::set<std::string> atoms;
    collect_atoms(requirements[r].formula, atoms);
    for (const std::string& atom : atoms) {
      if (predicates.find(atom) == predicates.end()) {
        fail("unbound proposition '" + atom + "' in requirement '" +
                 requirements[r].name + "'",
             requirement_sites[r]);
      }
    }
  }

  return RequirementSet(std::move(predicates), std::move(requirements));
}

Ast Parser::parse_formula_only() {
  Ast ast = parse_expr();
  if (peek().kind != TokKind::End) {
    fail("unexpected trailing input after formula", peek());
  }
  return ast;
}

}  // namespace

RequirementSet parse_spec(std::string_view text) {
  return Parser(text).parse_spec();
}

Formula parse_formula(std::string_view text) {
  return desugar(Parser(text).parse_formula_only());
}

}  // namespace mtlmon
