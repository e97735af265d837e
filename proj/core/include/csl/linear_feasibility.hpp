#pragma once

#include <optional>
#include <span>
#include <vector>

#include "csl/rational.hpp"

namespace csl::lp {

/// Dense row-major system A x = b.
struct EqualitySystem {
  std::size_t columns = 0;
  std::vector<std::vector<Rational>> rows;  // each of length `columns`
  std::vector<Rational> rhs;                // one entry per row
};

/// Finds some x >= 0 with A x = b, or returns nullopt if none exists.
///
/// Phase-one simplex over exact rationals: one artificial variable per row,
/// minimise their sum, pivot with Bland's smallest-index rule so the method
/// cannot cycle. The system is feasible iff the optimum is zero.
std::optional<std::vector<Rational>> find_nonnegative_solution(const EqualitySystem& system);

}  // namespace csl::lp
