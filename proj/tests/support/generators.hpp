#pragma once

// Seeded random instances for property tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "csl/convex_set.hpp"
#include "csl/distribution.hpp"
#include "csl/term.hpp"

namespace csl::testing {

using Rng = std::mt19937_64;

inline std::vector<Atom> atoms(std::size_t n) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f"};
  std::vector<Atom> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(names[i]);
  return out;
}

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p_true = 0.5) {
  return std::bernoulli_distribution(p_true)(rng);
}

/// p in (0,1) with denominator at most `max_den`.
inline Rational random_probability(Rng& rng, std::size_t max_den = 12) {
  const auto den = static_cast<std::int64_t>(uniform(rng, 2, max_den));
  const auto num = static_cast<std::int64_t>(uniform(rng, 1, static_cast<std::size_t>(den) - 1));
  return Rational(num, den);
}

/// `k` strictly positive weights summing to 1, common denominator <= max_den.
inline std::vector<Rational> random_weights(Rng& rng, std::size_t k, std::size_t max_den = 12) {
  const std::size_t den = uniform(rng, std::max<std::size_t>(k, 1), std::max(k, max_den));
  std::vector<std::size_t> cuts(den - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(k - 1);
  cuts.push_back(0);
  cuts.push_back(den);
  std::sort(cuts.begin(), cuts.end());
  std::vector<Rational> w;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    w.emplace_back(static_cast<std::int64_t>(cuts[i + 1] - cuts[i]),
                   static_cast<std::int64_t>(den));
  }
  return w;
}

template <class T>
Distribution<T> random_dist_over(Rng& rng, const std::vector<T>& keys, std::size_t max_den = 12) {
  std::vector<T> pool = keys;
  std::shuffle(pool.begin(), pool.end(), rng);
  const std::size_t k = uniform(rng, 1, std::min(pool.size(), max_den));
  const auto w = random_weights(rng, k, max_den);
  std::vector<typename Distribution<T>::Entry> entries;
  for (std::size_t i = 0; i < k; ++i) entries.emplace_back(pool[i], w[i]);
  return Distribution<T>::make(std::move(entries));
}

inline Dist random_dist(Rng& rng, std::size_t n_atoms = 4, std::size_t max_den = 12) {
  return random_dist_over(rng, atoms(n_atoms), max_den);
}

template <class T>
std::vector<Distribution<T>> random_generators_over(Rng& rng, const std::vector<T>& keys,
                                                    std::size_t max_gens, std::size_t max_den = 12) {
  std::vector<Distribution<T>> gens;
  const std::size_t n = uniform(rng, 1, max_gens);
  for (std::size_t i = 0; i < n; ++i) gens.push_back(random_dist_over(rng, keys, max_den));
  return gens;
}

inline std::vector<Dist> random_generators(Rng& rng, std::size_t n_atoms = 4,
                                           std::size_t max_gens = 5, std::size_t max_den = 12) {
  return random_generators_over(rng, atoms(n_atoms), max_gens, max_den);
}

template <class T>
ConvexSetOf<T> random_set_over(Rng& rng, const std::vector<T>& keys, std::size_t max_gens = 3,
                               std::size_t max_den = 12) {
  return from_generators(random_generators_over(rng, keys, max_gens, max_den));
}

inline ConvexSet random_set(Rng& rng, std::size_t n_atoms = 3, std::size_t max_gens = 3,
                            std::size_t max_den = 12) {
  return random_set_over(rng, atoms(n_atoms), max_gens, max_den);
}

/// A pool of `n` distinct values produced by `make`.
template <class T, class Make>
std::vector<T> distinct_pool(std::size_t n, Make make) {
  std::vector<T> pool;
  for (int attempts = 0; pool.size() < n && attempts < 100; ++attempts) {
    T candidate = make();
    if (std::find(pool.begin(), pool.end(), candidate) == pool.end()) pool.push_back(candidate);
  }
  std::sort(pool.begin(), pool.end());
  return pool;
}

/// Random element of C C X: 1..3 inner sets, 1..3 outer generators.
inline ConvexSetOf<ConvexSet> random_nested(Rng& rng, std::size_t n_atoms = 3) {
  const auto inner = distinct_pool<ConvexSet>(uniform(rng, 1, 3), [&] { return random_set(rng, n_atoms); });
  return random_set_over(rng, inner, 3);
}

/// Random term: leaves become more likely as the depth budget shrinks.
inline Term random_term(Rng& rng, std::size_t max_depth, std::size_t n_atoms = 3,
                        double or_weight = 0.5) {
  const auto leaf_atoms = atoms(n_atoms);
  auto go = [&](auto& self, std::size_t depth_left) -> Term {
    const double stop = depth_left <= 1 ? 1.0 : 0.25 + 0.5 / static_cast<double>(depth_left);
    if (coin(rng, stop)) return Term::leaf(leaf_atoms[uniform(rng, 0, leaf_atoms.size() - 1)]);
    Term l = self(self, depth_left - 1);
    Term r = self(self, depth_left - 1);
    if (coin(rng, or_weight)) return Term::choice(std::move(l), std::move(r));
    return Term::mix(random_probability(rng), std::move(l), std::move(r));
  };
  return go(go, max_depth);
}

inline Term random_pterm(Rng& rng, std::size_t max_depth, std::size_t n_atoms = 3) {
  return random_term(rng, max_depth, n_atoms, 0.0);
}

}  // namespace csl::testing
