#pragma once

// Terms over the signature { (+), +_p : p in (0,1) } with atom leaves.
//
// Concrete syntax (s-expressions, whitespace-insensitive):
//
//   term     ::= atom | "(or" term term+ ")" | "(mix" rational term term ")"
//   atom     ::= [A-Za-z_][A-Za-z0-9_]*
//   rational ::= integer | integer "/" positive-integer
//
// "(or a b c)" is read as "(or (or a b) c)". A mix probability must reduce
// into the open interval (0,1). print_term always emits binary nodes with
// reduced fractions, so parse_term(print_term(t)) == t.

#include <memory>
#include <string>
#include <string_view>

#include "csl/atom.hpp"
#include "csl/rational.hpp"

namespace csl {

/// Immutable term tree with shared subterms.
class Term {
 public:
  enum class Kind { Leaf, Or, Mix };

  static Term leaf(Atom atom);
  /// Nondeterministic choice `left (+) right`.
  static Term choice(Term left, Term right);
  /// Probabilistic choice `left +_p right`. Throws InvalidProbability unless 0 < p < 1.
  static Term mix(Rational p, Term left, Term right);

  Kind kind() const noexcept;
  bool is_leaf() const noexcept { return kind() == Kind::Leaf; }
  bool is_or() const noexcept { return kind() == Kind::Or; }
  bool is_mix() const noexcept { return kind() == Kind::Mix; }

  /// Preconditions: is_leaf() for atom(), is_mix() for probability(),
  /// !is_leaf() for left()/right().
  const Atom& atom() const;
  const Rational& probability() const;
  const Term& left() const;
  const Term& right() const;

  std::size_t depth() const noexcept;
  std::size_t size() const noexcept;
  bool contains_or() const noexcept;

  /// Address of the shared node; equal for copies of the same term.
  const void* identity() const noexcept { return node_.get(); }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// A term with no Or node.
class PTerm {
 public:
  /// Throws NotProbabilistic if `term` contains an Or node.
  explicit PTerm(Term term);

  const Term& term() const noexcept { return term_; }

  friend bool operator==(const PTerm&, const PTerm&) = default;

 private:
  Term term_;
};

/// Throws ParseError (with byte offset) or InvalidProbability.
Term parse_term(std::string_view text);

std::string print_term(const Term& t);

/// True iff no Mix node has an Or node beneath it.
bool is_np_form(const Term& t);

}  // namespace csl
