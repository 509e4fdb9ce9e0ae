#pragma once

#include "stablenorm/rational.hpp"

namespace stablenorm {

/// Outcome of `minimize c.x subject to A x = b, x >= 0` over the rationals.
struct LinearProgramResult {
  enum class Status { Optimal, Infeasible, Unbounded };

  Status status = Status::Infeasible;
  RationalVector solution;  // set when Optimal
  Rational objective;       // set when Optimal
  // Set when Infeasible: y with y.A_j <= 0 for every column j and y.b > 0.
  RationalVector farkas;
};

/// Two-phase dense-tableau simplex with Bland's rule; exact, always terminates.
/// `constraints` is row-major (m rows of n entries). Redundant rows are allowed.
LinearProgramResult solve_linear_program(const RationalMatrix& constraints, const RationalVector& rhs,
                                         const RationalVector& cost);

}  // namespace stablenorm
