#pragma once

// Normalisation into n-p form: a (+)-combination of purely probabilistic
// terms. Two rules push every +_p below every (+):
//
//   (t1 (+) t2) +_p t3  ~>  (t1 +_p t3) (+) (t2 +_p t3)
//   t1 +_p (t2 (+) t3)  ~>  (t1 +_p t2) (+) (t1 +_p t3)
//
// Steps are taken innermost-leftmost; when both rules match one node the
// first rule wins.

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "csl/term.hpp"

namespace csl {

/// Summand list of i(t_1) (+) ... (+) i(t_n), sorted by the value of
/// iota_p (ties broken by printed form).
struct NPForm {
  std::vector<PTerm> summands;

  /// Left-nested Or over the summands.
  Term to_term() const;
};

/// One innermost-leftmost rewrite step, or nullopt if `t` has no redex.
std::optional<Term> rewrite_step(const Term& t);

struct Normalization {
  Term result;
  std::size_t steps = 0;
};

/// Rewrites until no redex remains. Returns nullopt if that takes more
/// than `step_budget` steps.
std::optional<Normalization> normalize(
    const Term& t, std::size_t step_budget = std::numeric_limits<std::size_t>::max());

/// Splits a term in n-p form at its Or nodes. Precondition: is_np_form(t).
NPForm flatten_np(const Term& t);

/// normalize() followed by flatten_np().
NPForm rewrite_np(const Term& t);

}  // namespace csl
