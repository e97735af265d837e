#pragma once

// Semantics of terms as convex sets, and the way back.
//
//   iota_p : PTerm -> Dist         iota  : Term -> ConvexSet
//   kappa_p: Dist -> PTerm         kappa : ConvexSet -> Term
//
// iota_p/kappa_p are mutually inverse up to the probabilistic axioms, and
// iota(kappa(S)) == S. canon(t) = kappa(iota(t)) picks one deterministic
// representative per equivalence class, so two terms are provably equal
// exactly when decide_eq says so.

#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "csl/convex_set.hpp"
#include "csl/distribution.hpp"
#include "csl/term.hpp"

namespace csl {

Dist iota_p(const PTerm& t);

/// For strictly positive weights w_1..w_n summing to 1, returns
/// p_k = (w_1 + ... + w_k) / (w_1 + ... + w_{k+1}) for k = 1..n-1, so that
/// (...((t_1 +_{p_1} t_2) +_{p_2} t_3) ...) +_{p_{n-1}} t_n has weight w_i on
/// t_i. Throws NotAWeightVector otherwise.
std::vector<Rational> binary_chain(const std::vector<Rational>& weights);

/// Left-nested mix over the atoms of `d` in canonical order.
PTerm kappa_p(const Dist& d);

/// Interprets `t` in the convex semilattice of convex sets over T, sending
/// each leaf through `env`.
template <class T, class Env>
ConvexSetOf<T> evaluate(const Term& t, Env&& env) {
  switch (t.kind()) {
    case Term::Kind::Leaf:
      return env(t.atom());
    case Term::Kind::Or:
      return convex_union(evaluate<T>(t.left(), env), evaluate<T>(t.right(), env));
    case Term::Kind::Mix:
      return minkowski(t.probability(), evaluate<T>(t.left(), env), evaluate<T>(t.right(), env));
  }
  throw std::logic_error("evaluate: unknown term kind");
}

ConvexSet iota(const Term& t);

/// Memoized iota keyed on shared subterms. Rewriting shares untouched
/// subterms, so one cache across a rewrite sequence reevaluates only the
/// nodes on the rewritten path.
class IotaCache {
 public:
  const ConvexSet& operator()(const Term& t);
  std::size_t size() const noexcept { return memo_.size(); }

 private:
  std::unordered_map<const void*, std::pair<Term, ConvexSet>> memo_;
};

/// Or of kappa_p over the base, left-nested in canonical order; the bare
/// p-term for a singleton base.
Term kappa(const ConvexSet& s);

Term canon(const Term& t);

bool decide_eq(const Term& t1, const Term& t2);

/// Replaces every leaf bound in `binding`; other leaves are kept.
Term substitute(const Term& t, const std::map<Atom, Term>& binding);

}  // namespace csl
