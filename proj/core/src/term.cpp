#include "csl/term.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "csl/error.hpp"

namespace csl {

struct Term::Node {
  Kind kind;
  std::optional<Atom> atom;
  Rational probability;
  std::optional<Term> left;
  std::optional<Term> right;
  std::size_t depth = 1;
  std::size_t size = 1;
  bool contains_or = false;
};

Term Term::leaf(Atom atom) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Leaf;
  node->atom = std::move(atom);
  return Term(std::move(node));
}

Term Term::choice(Term left, Term right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Or;
  node->depth = 1 + std::max(left.depth(), right.depth());
  node->size = 1 + left.size() + right.size();
  node->contains_or = true;
  node->left = std::move(left);
  node->right = std::move(right);
  return Term(std::move(node));
}

Term Term::mix(Rational p, Term left, Term right) {
  if (!p.is_open_probability()) {
    throw InvalidProbability("mixing probability " + p.str() + " is not in (0,1)");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Mix;
  node->probability = std::move(p);
  node->depth = 1 + std::max(left.depth(), right.depth());
  node->size = 1 + left.size() + right.size();
  node->contains_or = left.contains_or() || right.contains_or();
  node->left = std::move(left);
  node->right = std::move(right);
  return Term(std::move(node));
}

Term::Kind Term::kind() const noexcept { return node_->kind; }

const Atom& Term::atom() const {
  if (!is_leaf()) throw std::logic_error("Term::atom on a non-leaf");
  return *node_->atom;
}

const Rational& Term::probability() const {
  if (!is_mix()) throw std::logic_error("Term::probability on a non-mix");
  return node_->probability;
}

const Term& Term::left() const {
  if (is_leaf()) throw std::logic_error("Term::left on a leaf");
  return *node_->left;
}

const Term& Term::right() const {
  if (is_leaf()) throw std::logic_error("Term::right on a leaf");
  return *node_->right;
}

std::size_t Term::depth() const noexcept { return node_->depth; }
std::size_t Term::size() const noexcept { return node_->size; }
bool Term::contains_or() const noexcept { return node_->contains_or; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Term::Kind::Leaf:
      return a.atom() == b.atom();
    case Term::Kind::Mix:
      if (a.probability() != b.probability()) return false;
      [[fallthrough]];
    case Term::Kind::Or:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

PTerm::PTerm(Term term) : term_(std::move(term)) {
  if (term_.contains_or()) throw NotProbabilistic("term '" + print_term(term_) + "' contains or");
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term parse_all() {
    Term t = parse_term();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    return text_[pos_];
  }

  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  // Maximal run of characters that are neither whitespace nor parentheses.
  std::string_view word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) break;
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  Term parse_term() {
    if (peek() == '(') return parse_compound();
    const std::size_t start = pos_;
    const std::string_view name = word();
    if (name.empty()) throw ParseError("expected a term", start);
    if (!Atom::is_identifier(name)) {
      throw ParseError("invalid atom '" + std::string(name) + "'", start);
    }
    return Term::leaf(Atom(std::string(name)));
  }

  Term parse_compound() {
    const std::size_t open = pos_;
    expect('(');
    const std::size_t head_pos = (skip_space(), pos_);
    const std::string_view head = word();
    if (head == "or") {
      std::vector<Term> operands;
      while (peek() != ')') operands.push_back(parse_term());
      ++pos_;
      if (operands.size() < 2) throw ParseError("'or' needs at least two operands", open);
      Term acc = operands.front();
      for (std::size_t i = 1; i < operands.size(); ++i) acc = Term::choice(acc, operands[i]);
      return acc;
    }
    if (head == "mix") {
      const std::size_t prob_pos = (skip_space(), pos_);
      const std::string_view prob_text = word();
      const auto p = Rational::parse(prob_text);
      if (!p) throw ParseError("invalid rational '" + std::string(prob_text) + "'", prob_pos);
      if (!p->is_open_probability()) {
        throw InvalidProbability("mixing probability " + p->str() + " at offset " +
                                 std::to_string(prob_pos) + " is not in (0,1)");
      }
      Term left = parse_term();
      Term right = parse_term();
      if (peek() != ')') throw ParseError("'mix' takes exactly two operands", pos_);
      ++pos_;
      return Term::mix(*p, std::move(left), std::move(right));
    }
    throw ParseError("expected 'or' or 'mix'", head_pos);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_into(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Leaf:
      out += t.atom().name();
      return;
    case Term::Kind::Or:
      out += "(or ";
      break;
    case Term::Kind::Mix:
      out += "(mix ";
      out += t.probability().str();
      out += ' ';
      break;
  }
  print_into(t.left(), out);
  out += ' ';
  print_into(t.right(), out);
  out += ')';
}

}  // namespace

Term parse_term(std::string_view text) { return Parser(text).parse_all(); }

std::string print_term(const Term& t) {
  std::string out;
  print_into(t, out);
  return out;
}

bool is_np_form(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Leaf:
      return true;
    case Term::Kind::Or:
      return is_np_form(t.left()) && is_np_form(t.right());
    case Term::Kind::Mix:
      return !t.contains_or();
  }
  return false;
}

}  // namespace csl
