#include "csl/interpretation.hpp"

#include <stdexcept>
#include <utility>

namespace csl {

Dist iota_p(const PTerm& t) {
  const Term& term = t.term();
  if (term.is_leaf()) return d_unit(term.atom());
  return mix(term.probability(), iota_p(PTerm(term.left())), iota_p(PTerm(term.right())));
}

std::vector<Rational> binary_chain(const std::vector<Rational>& weights) {
  detail::check_weight_vector(weights, weights.size());
  for (const auto& w : weights) {
    if (w.sign() <= 0) throw NotAWeightVector("binary_chain needs strictly positive weights");
  }
  std::vector<Rational> chain;
  chain.reserve(weights.size() - 1);
  Rational prefix = weights.front();
  for (std::size_t k = 1; k < weights.size(); ++k) {
    const Rational next = prefix + weights[k];
    chain.push_back(prefix / next);
    prefix = next;
  }
  return chain;
}

PTerm kappa_p(const Dist& d) {
  const auto& entries = d.entries();
  std::vector<Rational> weights;
  weights.reserve(entries.size());
  for (const auto& [atom, w] : entries) weights.push_back(w);
  const std::vector<Rational> chain = binary_chain(weights);

  Term acc = Term::leaf(entries.front().first);
  for (std::size_t k = 1; k < entries.size(); ++k) {
    acc = Term::mix(chain[k - 1], std::move(acc), Term::leaf(entries[k].first));
  }
  return PTerm(std::move(acc));
}

ConvexSet iota(const Term& t) {
  IotaCache cache;
  return cache(t);
}

const ConvexSet& IotaCache::operator()(const Term& t) {
  if (const auto it = memo_.find(t.identity()); it != memo_.end()) return it->second.second;
  ConvexSet value = [&] {
    switch (t.kind()) {
      case Term::Kind::Leaf:
        return c_unit(t.atom());
      case Term::Kind::Or: {
        const ConvexSet& l = (*this)(t.left());
        return convex_union(l, (*this)(t.right()));
      }
      case Term::Kind::Mix: {
        const ConvexSet& l = (*this)(t.left());
        return minkowski(t.probability(), l, (*this)(t.right()));
      }
    }
    throw std::logic_error("iota: unknown term kind");
  }();
  return memo_.emplace(t.identity(), std::make_pair(t, std::move(value))).first->second.second;
}

Term kappa(const ConvexSet& s) {
  const auto& base = s.base();
  Term acc = kappa_p(base.front()).term();
  for (std::size_t i = 1; i < base.size(); ++i) {
    acc = Term::choice(std::move(acc), kappa_p(base[i]).term());
  }
  return acc;
}

Term canon(const Term& t) { return kappa(iota(t)); }

bool decide_eq(const Term& t1, const Term& t2) { return iota(t1) == iota(t2); }

Term substitute(const Term& t, const std::map<Atom, Term>& binding) {
  switch (t.kind()) {
    case Term::Kind::Leaf: {
      const auto it = binding.find(t.atom());
      return it == binding.end() ? t : it->second;
    }
    case Term::Kind::Or:
      return Term::choice(substitute(t.left(), binding), substitute(t.right(), binding));
    case Term::Kind::Mix:
      return Term::mix(t.probability(), substitute(t.left(), binding),
                       substitute(t.right(), binding));
  }
  throw std::logic_error("substitute: unknown term kind");
}

}  // namespace csl
