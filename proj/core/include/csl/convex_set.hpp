#pragma once

// Finitely generated convex sets of finitely supported distributions.
//
// A convex set is stored as its unique base: the generators none of which is
// a convex combination of the others. Because that base is unique, two sets
// are equal exactly when their (sorted) bases are equal, and the defaulted
// comparison operators below are extensional.
//
// Everything is templated on the support type T so that the same code
// handles C X (T = Atom) and the nested C C X used by the monad
// multiplication (T = ConvexSet).

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "csl/distribution.hpp"
#include "csl/error.hpp"
#include "csl/linear_feasibility.hpp"
#include "csl/rational.hpp"

namespace csl {

/// Non-empty list of distributions, possibly redundant or repeated.
template <class T>
class GeneratorSetOf {
 public:
  /// Throws EmptyGeneratorSet when `gens` is empty.
  explicit GeneratorSetOf(std::vector<Distribution<T>> gens) : gens_(std::move(gens)) {
    if (gens_.empty()) throw EmptyGeneratorSet("a generator set needs at least one distribution");
  }

  const std::vector<Distribution<T>>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

  friend bool operator==(const GeneratorSetOf&, const GeneratorSetOf&) = default;

 private:
  std::vector<Distribution<T>> gens_;
};

template <class T>
class ConvexSetOf;

template <class T>
ConvexSetOf<T> unique_base(const GeneratorSetOf<T>& gens);

/// conv(base), with `base` minimal and sorted in canonical order.
template <class T>
class ConvexSetOf {
 public:
  const std::vector<Distribution<T>>& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return base_.size(); }
  bool is_singleton() const noexcept { return base_.size() == 1; }

  friend bool operator==(const ConvexSetOf&, const ConvexSetOf&) = default;
  friend auto operator<=>(const ConvexSetOf&, const ConvexSetOf&) = default;

 private:
  explicit ConvexSetOf(std::vector<Distribution<T>> base) : base_(std::move(base)) {}

  friend ConvexSetOf unique_base<T>(const GeneratorSetOf<T>&);

  std::vector<Distribution<T>> base_;
};

using GeneratorSet = GeneratorSetOf<Atom>;
using ConvexSet = ConvexSetOf<Atom>;

/// Coefficients alpha >= 0 with sum(alpha) = 1 and sum_i alpha_i gens[i] = d,
/// or nullopt if `d` is outside conv(gens).
template <class T>
std::optional<std::vector<Rational>> hull_coefficients(const Distribution<T>& d,
                                                       std::span<const Distribution<T>> gens) {
  if (gens.empty()) return std::nullopt;

  std::vector<T> keys = d.support();
  for (const auto& g : gens) {
    for (const auto& [key, w] : g.entries()) keys.push_back(key);
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  // Every key of d must be reachable, otherwise its row is 0 = d(key) > 0.
  for (const auto& [key, w] : d.entries()) {
    const bool covered = std::any_of(gens.begin(), gens.end(), [&](const Distribution<T>& g) {
      return !g.weight(key).is_zero();
    });
    if (!covered) return std::nullopt;
  }

  lp::EqualitySystem system;
  system.columns = gens.size();
  for (const auto& key : keys) {
    std::vector<Rational> row;
    row.reserve(gens.size());
    for (const auto& g : gens) row.push_back(g.weight(key));
    system.rows.push_back(std::move(row));
    system.rhs.push_back(d.weight(key));
  }
  system.rows.emplace_back(gens.size(), Rational(1));
  system.rhs.emplace_back(1);
  return lp::find_nonnegative_solution(system);
}

/// Decides d in conv(gens) by exact linear feasibility.
template <class T>
bool member_of_hull(const Distribution<T>& d, std::span<const Distribution<T>> gens) {
  return hull_coefficients(d, gens).has_value();
}

template <class T>
bool member_of_hull(const Distribution<T>& d, const GeneratorSetOf<T>& gens) {
  return member_of_hull(d, std::span<const Distribution<T>>(gens.generators()));
}

template <class T>
bool member_of_hull(const Distribution<T>& d, const ConvexSetOf<T>& s) {
  return member_of_hull(d, std::span<const Distribution<T>>(s.base()));
}

/// Deduplicates the generators and removes, in canonical order, every one
/// that lies in the hull of the survivors. The result does not depend on the
/// order of `gens`, and its hull equals conv(gens).
template <class T>
ConvexSetOf<T> unique_base(const GeneratorSetOf<T>& gens) {
  std::vector<Distribution<T>> pool = gens.generators();
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  // One pass suffices: removing a redundant point leaves the hull unchanged,
  // and a point kept once stays outside the hull of any subset of the others.
  std::vector<bool> removed(pool.size(), false);
  std::vector<Distribution<T>> others;
  for (std::size_t i = 0; i < pool.size() && pool.size() > 1; ++i) {
    others.clear();
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (j != i && !removed[j]) others.push_back(pool[j]);
    }
    if (member_of_hull(pool[i], std::span<const Distribution<T>>(others))) removed[i] = true;
  }

  std::vector<Distribution<T>> base;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (!removed[i]) base.push_back(std::move(pool[i]));
  }
  return ConvexSetOf<T>(std::move(base));
}

template <class T>
ConvexSetOf<T> unique_base(std::vector<Distribution<T>> gens) {
  return unique_base(GeneratorSetOf<T>(std::move(gens)));
}

/// The canonical image of a generator list under conv.
template <class T>
ConvexSetOf<T> from_generators(const GeneratorSetOf<T>& gens) {
  return unique_base(gens);
}

template <class T>
ConvexSetOf<T> from_generators(std::vector<Distribution<T>> gens) {
  return unique_base(std::move(gens));
}

inline ConvexSet unique_base(std::vector<Dist> gens) {
  return unique_base(GeneratorSet(std::move(gens)));
}

inline ConvexSet from_generators(std::vector<Dist> gens) { return unique_base(std::move(gens)); }

/// S1 (+) S2 = conv(S1 u S2).
template <class T>
ConvexSetOf<T> convex_union(const ConvexSetOf<T>& s1, const ConvexSetOf<T>& s2) {
  std::vector<Distribution<T>> gens = s1.base();
  gens.insert(gens.end(), s2.base().begin(), s2.base().end());
  return unique_base(std::move(gens));
}

/// S1 +_p S2 = { p d1 + (1 - p) d2 }, computed on the bases. Throws
/// InvalidProbability unless 0 < p < 1.
template <class T>
ConvexSetOf<T> minkowski(const Rational& p, const ConvexSetOf<T>& s1, const ConvexSetOf<T>& s2) {
  if (!p.is_open_probability()) {
    throw InvalidProbability("mixing probability " + p.str() + " is not in (0,1)");
  }
  std::vector<Distribution<T>> gens;
  gens.reserve(s1.size() * s2.size());
  for (const auto& b1 : s1.base()) {
    for (const auto& b2 : s2.base()) gens.push_back(mix(p, b1, b2));
  }
  return unique_base(std::move(gens));
}

/// Unit of the convex-set monad: {delta_a}.
template <class T>
ConvexSetOf<T> c_unit(T key) {
  return unique_base(std::vector<Distribution<T>>{d_unit(std::move(key))});
}

/// Functor action: C f(S) = conv({ D f(d) | d in base(S) }).
template <class T, class F>
auto c_map(F&& f, const ConvexSetOf<T>& s) {
  using U = std::remove_cvref_t<std::invoke_result_t<F&, const T&>>;
  std::vector<Distribution<U>> images;
  images.reserve(s.size());
  for (const auto& d : s.base()) images.push_back(d_map(f, d));
  return unique_base(std::move(images));
}

/// Multiplication of the convex-set monad, by the finite base formula: for
/// every outer base element Phi and every choice of one base point d_U per
/// U in supp(Phi), collect sum_U Phi(U) d_U, then take the unique base of the
/// union of all those points.
template <class T>
ConvexSetOf<T> c_mult(const ConvexSetOf<ConvexSetOf<T>>& nested) {
  std::vector<Distribution<T>> gens;
  for (const auto& phi : nested.base()) {
    const auto& entries = phi.entries();
    std::vector<Rational> weights;
    weights.reserve(entries.size());
    for (const auto& [inner, w] : entries) weights.push_back(w);

    // Odometer over the product of the inner bases.
    std::vector<std::size_t> choice(entries.size(), 0);
    std::vector<Distribution<T>> picked;
    for (;;) {
      picked.clear();
      for (std::size_t k = 0; k < entries.size(); ++k) {
        picked.push_back(entries[k].first.base()[choice[k]]);
      }
      gens.push_back(convex_combine(weights, picked));

      std::size_t k = 0;
      while (k < entries.size() && ++choice[k] == entries[k].first.size()) {
        choice[k] = 0;
        ++k;
      }
      if (k == entries.size()) break;
    }
  }
  return unique_base(std::move(gens));
}

/// Both the raw image P_ne D f(gens), as a deduplicated sorted list with no
/// closure applied, and the unique base of that image.
template <class U>
struct ImageAndBase {
  GeneratorSetOf<U> raw;
  ConvexSetOf<U> base;
};

template <class T, class F>
auto pne_d_map_then_base(F&& f, const GeneratorSetOf<T>& gens) {
  using U = std::remove_cvref_t<std::invoke_result_t<F&, const T&>>;
  std::vector<Distribution<U>> images;
  images.reserve(gens.size());
  for (const auto& d : gens.generators()) images.push_back(d_map(f, d));
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  GeneratorSetOf<U> raw(images);
  ConvexSetOf<U> base = unique_base(raw);
  return ImageAndBase<U>{std::move(raw), std::move(base)};
}

}  // namespace csl
