#include "stablenorm/linear_program.hpp"

#include <optional>
#include <string>

#include "stablenorm/error.hpp"

namespace stablenorm {

namespace {

// Tableau over columns [structural | artificial | rhs].
class Tableau {
 public:
  Tableau(const RationalMatrix& a, const RationalVector& b)
      : rows_(a.size()), structural_(a.empty() ? 0 : a.front().size()), flip_(rows_, 1) {
    cols_ = structural_ + rows_ + 1;
    t_.assign(rows_, RationalVector(cols_));
    basis_.resize(rows_);
    active_.assign(rows_, true);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (a[i].size() != structural_) throw Error(ErrorKind::DimensionMismatch, "ragged constraint matrix");
      if (b[i] < 0) flip_[i] = -1;
      for (std::size_t j = 0; j < structural_; ++j) t_[i][j] = flip_[i] * a[i][j];
      t_[i][structural_ + i] = 1;
      t_[i][cols_ - 1] = flip_[i] * b[i];
      basis_[i] = structural_ + i;
    }
  }

  // Reduced costs for the given column costs; the rhs slot holds -objective.
  void price(const RationalVector& cost) {
    reduced_ = cost;
    reduced_.resize(cols_);
    reduced_[cols_ - 1] = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!active_[i]) continue;
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (t_[i][j] != 0) reduced_[j] -= cb * t_[i][j];
      }
    }
  }

  // Bland's rule. Returns false when unbounded.
  bool optimize(std::size_t enterable) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < enterable; ++j) {
        if (reduced_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;

      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (!active_[i] || t_[i][*entering] <= 0) continue;
        Rational ratio = t_[i][cols_ - 1] / t_[i][*entering];
        if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    Rational inv = 1 / t_[row][col];
    for (auto& x : t_[row]) {
      if (x != 0) x *= inv;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || t_[i][col] == 0) continue;
      Rational f = t_[i][col];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (t_[row][j] != 0) t_[i][j] -= f * t_[row][j];
      }
    }
    if (reduced_[col] != 0) {
      Rational f = reduced_[col];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (t_[row][j] != 0) reduced_[j] -= f * t_[row][j];
      }
    }
    basis_[row] = col;
  }

  // After phase one: pivot zero-level artificials out, or retire their rows.
  void expel_artificials() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!active_[i] || basis_[i] < structural_) continue;
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < structural_; ++j) {
        if (t_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col) {
        pivot(i, *col);
      } else {
        active_[i] = false;
      }
    }
  }

  RationalVector primal() const {
    RationalVector x(structural_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (active_[i] && basis_[i] < structural_) x[basis_[i]] = t_[i][cols_ - 1];
    }
    return x;
  }

  Rational objective_value() const { return -reduced_[cols_ - 1]; }

  // Phase-one duals y_i = 1 - reduced cost of artificial i, mapped back through row flips.
  RationalVector farkas() const {
    RationalVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) y[i] = flip_[i] * (1 - reduced_[structural_ + i]);
    return y;
  }

  std::size_t rows() const { return rows_; }
  std::size_t structural() const { return structural_; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t rows_;
  std::size_t structural_;
  std::size_t cols_ = 0;
  std::vector<int> flip_;
  RationalMatrix t_;
  RationalVector reduced_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_;
};

}  // namespace

LinearProgramResult solve_linear_program(const RationalMatrix& constraints, const RationalVector& rhs,
                                         const RationalVector& cost) {
  if (constraints.size() != rhs.size()) {
    throw Error(ErrorKind::DimensionMismatch, std::to_string(constraints.size()) + " rows but " +
                                                  std::to_string(rhs.size()) + " right-hand sides");
  }
  Tableau tab(constraints, rhs);
  if (cost.size() != tab.structural()) {
    throw Error(ErrorKind::DimensionMismatch, "cost vector has wrong length");
  }

  LinearProgramResult result;

  RationalVector phase_one(tab.cols());
  for (std::size_t i = 0; i < tab.rows(); ++i) phase_one[tab.structural() + i] = 1;
  tab.price(phase_one);
  tab.optimize(tab.structural());
  if (tab.objective_value() > 0) {
    result.status = LinearProgramResult::Status::Infeasible;
    result.farkas = tab.farkas();
    return result;
  }

  tab.expel_artificials();
  RationalVector phase_two(tab.cols());
  for (std::size_t j = 0; j < cost.size(); ++j) phase_two[j] = cost[j];
  tab.price(phase_two);
  if (!tab.optimize(tab.structural())) {
    result.status = LinearProgramResult::Status::Unbounded;
    return result;
  }
  result.status = LinearProgramResult::Status::Optimal;
  result.solution = tab.primal();
  result.objective = dot(cost, result.solution);
  return result;
}

}  // namespace stablenorm
