#include "csl/linear_feasibility.hpp"

#include <stdexcept>

namespace csl::lp {

namespace {

class Tableau {
 public:
  explicit Tableau(const EqualitySystem& system)
      : rows_(system.rows.size()),
        structural_(system.columns),
        width_(system.columns + rows_ + 1),
        cells_(rows_, std::vector<Rational>(width_)),
        cost_(width_),
        basis_(rows_) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (system.rows[i].size() != structural_) {
        throw std::invalid_argument("EqualitySystem: row length does not match column count");
      }
      const bool flip = system.rhs[i].sign() < 0;
      for (std::size_t j = 0; j < structural_; ++j) {
        cells_[i][j] = flip ? -system.rows[i][j] : system.rows[i][j];
      }
      cells_[i][structural_ + i] = Rational(1);
      cells_[i][rhs_column()] = flip ? -system.rhs[i] : system.rhs[i];
      basis_[i] = structural_ + i;
    }
    // Reduced costs of the phase-one objective (sum of artificials), priced
    // out against the initial all-artificial basis.
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < structural_; ++j) cost_[j] -= cells_[i][j];
      cost_[rhs_column()] -= cells_[i][rhs_column()];
    }
  }

  void optimise() {
    for (;;) {
      const auto entering = choose_entering();
      if (!entering) return;
      const auto leaving = choose_leaving(*entering);
      // The phase-one objective is bounded below by zero, so an improving
      // column always has a positive entry.
      if (!leaving) throw std::logic_error("phase-one simplex: unbounded direction");
      pivot(*leaving, *entering);
    }
  }

  bool feasible() const { return cost_[rhs_column()].is_zero(); }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(structural_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < structural_) x[basis_[i]] = cells_[i][rhs_column()];
    }
    return x;
  }

 private:
  std::size_t rhs_column() const { return width_ - 1; }

  std::optional<std::size_t> choose_entering() const {
    for (std::size_t j = 0; j < rhs_column(); ++j) {
      if (cost_[j].sign() < 0) return j;
    }
    return std::nullopt;
  }

  // Minimum ratio test; ties go to the smallest basic variable index (Bland).
  std::optional<std::size_t> choose_leaving(std::size_t column) const {
    std::optional<std::size_t> best;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (cells_[i][column].sign() <= 0) continue;
      Rational ratio = cells_[i][rhs_column()] / cells_[i][column];
      if (!best || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*best])) {
        best = i;
        best_ratio = std::move(ratio);
      }
    }
    return best;
  }

  void pivot(std::size_t row, std::size_t column) {
    const Rational pivot_value = cells_[row][column];
    for (auto& cell : cells_[row]) cell /= pivot_value;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row) continue;
      eliminate(cells_[i], row, column);
    }
    eliminate(cost_, row, column);
    basis_[row] = column;
  }

  void eliminate(std::vector<Rational>& target, std::size_t row, std::size_t column) {
    if (target[column].is_zero()) return;
    const Rational factor = target[column];
    for (std::size_t j = 0; j < width_; ++j) {
      if (!cells_[row][j].is_zero()) target[j] -= factor * cells_[row][j];
    }
  }

  std::size_t rows_;
  std::size_t structural_;
  std::size_t width_;
  std::vector<std::vector<Rational>> cells_;
  std::vector<Rational> cost_;  // last entry holds minus the objective value
  std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<std::vector<Rational>> find_nonnegative_solution(const EqualitySystem& system) {
  if (system.rows.size() != system.rhs.size()) {
    throw std::invalid_argument("EqualitySystem: row and rhs counts differ");
  }
  Tableau tableau(system);
  tableau.optimise();
  if (!tableau.feasible()) return std::nullopt;
  return tableau.solution();
}

}  // namespace csl::lp
