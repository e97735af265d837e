#pragma once

// Finitely supported probability distributions and the distribution monad.
//
// `Distribution<T>` is a finite map T -> Rational with strictly positive
// weights summing to exactly 1. Entries are kept sorted by T, so equality is
// structural and the defaulted ordering (lexicographic on the entry list) is
// the canonical order used by every other module.
//
// T is any totally ordered value type. `Dist` is the case T = Atom; the
// nested instances Distribution<Distribution<T>> and
// Distribution<ConvexSetOf<T>> carry the monad multiplications.

#include <algorithm>
#include <compare>
#include <functional>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "csl/atom.hpp"
#include "csl/error.hpp"
#include "csl/rational.hpp"

namespace csl {

namespace detail {

/// Throws NotAWeightVector unless `weights` is a non-empty list of
/// nonnegative rationals summing to 1 with exactly `expected_size` entries.
void check_weight_vector(std::span<const Rational> weights, std::size_t expected_size);

}  // namespace detail

template <class T>
class Distribution {
 public:
  using Entry = std::pair<T, Rational>;

  /// Merges duplicate keys by summing, drops zero weights and sorts.
  /// Throws NotADistribution on a negative weight or a total other than 1.
  static Distribution make(std::vector<Entry> pairs) {
    for (const auto& [key, weight] : pairs) {
      if (weight.sign() < 0) throw NotADistribution("negative weight " + weight.str());
    }
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const Entry& a, const Entry& b) { return a.first < b.first; });

    std::vector<Entry> merged;
    merged.reserve(pairs.size());
    Rational total;
    for (auto& entry : pairs) {
      total += entry.second;
      if (!merged.empty() && merged.back().first == entry.first) {
        merged.back().second += entry.second;
      } else {
        merged.push_back(std::move(entry));
      }
    }
    if (!total.is_one()) throw NotADistribution("weights sum to " + total.str() + ", not 1");
    std::erase_if(merged, [](const Entry& e) { return e.second.is_zero(); });
    return Distribution(std::move(merged));
  }

  /// Point mass at `key`.
  static Distribution dirac(T key) {
    std::vector<Entry> entries;
    entries.emplace_back(std::move(key), Rational(1));
    return Distribution(std::move(entries));
  }

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t support_size() const noexcept { return entries_.size(); }
  bool is_dirac() const noexcept { return entries_.size() == 1; }

  /// Weight of `key`; zero outside the support.
  Rational weight(const T& key) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                               [](const Entry& e, const T& k) { return e.first < k; });
    return it != entries_.end() && it->first == key ? it->second : Rational(0);
  }

  std::vector<T> support() const {
    std::vector<T> keys;
    keys.reserve(entries_.size());
    for (const auto& e : entries_) keys.push_back(e.first);
    return keys;
  }

  friend bool operator==(const Distribution&, const Distribution&) = default;
  friend auto operator<=>(const Distribution&, const Distribution&) = default;

 private:
  explicit Distribution(std::vector<Entry> entries) : entries_(std::move(entries)) {}

  std::vector<Entry> entries_;
};

using Dist = Distribution<Atom>;

inline Dist dist_make(std::vector<std::pair<Atom, Rational>> pairs) {
  return Dist::make(std::move(pairs));
}

/// Pointwise convex combination sum_i weights[i] * dists[i].
template <class T>
Distribution<T> convex_combine(std::span<const Rational> weights,
                               std::span<const Distribution<T>> dists) {
  detail::check_weight_vector(weights, dists.size());
  std::vector<typename Distribution<T>::Entry> scaled;
  for (std::size_t i = 0; i < dists.size(); ++i) {
    if (weights[i].is_zero()) continue;
    for (const auto& [key, w] : dists[i].entries()) scaled.emplace_back(key, weights[i] * w);
  }
  // Weights are a valid vector and every input is a distribution, so the
  // total is exactly 1 and make() cannot throw.
  return Distribution<T>::make(std::move(scaled));
}

template <class T>
Distribution<T> convex_combine(const std::vector<Rational>& weights,
                               const std::vector<Distribution<T>>& dists) {
  return convex_combine(std::span<const Rational>(weights),
                        std::span<const Distribution<T>>(dists));
}

/// Two-point mixture p * a + (1 - p) * b for p in [0, 1].
template <class T>
Distribution<T> mix(const Rational& p, const Distribution<T>& a, const Distribution<T>& b) {
  const std::vector<Rational> weights{p, Rational(1) - p};
  const std::vector<Distribution<T>> points{a, b};
  return convex_combine(weights, points);
}

/// Unit of the distribution monad.
template <class T>
Distribution<T> d_unit(T key) {
  return Distribution<T>::dirac(std::move(key));
}

/// Functor action: pushforward of `d` along `f`.
template <class T, class F>
auto d_map(F&& f, const Distribution<T>& d) {
  using U = std::remove_cvref_t<std::invoke_result_t<F&, const T&>>;
  std::vector<typename Distribution<U>::Entry> image;
  image.reserve(d.support_size());
  for (const auto& [key, w] : d.entries()) image.emplace_back(std::invoke(f, key), w);
  return Distribution<U>::make(std::move(image));
}

/// Multiplication of the distribution monad: flattens a distribution of
/// distributions by weighted pointwise sum.
template <class T>
Distribution<T> d_mult(const Distribution<Distribution<T>>& big) {
  std::vector<Rational> weights;
  std::vector<Distribution<T>> points;
  for (const auto& [inner, w] : big.entries()) {
    points.push_back(inner);
    weights.push_back(w);
  }
  return convex_combine(weights, points);
}

/// Flattens an explicit weighted list of distributions. Throws
/// NotADistribution when the outer weights do not form a distribution.
template <class T>
Distribution<T> d_mult(std::vector<std::pair<Distribution<T>, Rational>> big) {
  return d_mult(Distribution<Distribution<T>>::make(std::move(big)));
}

}  // namespace csl
