#pragma once

// Maximization over free variables with inequality and equality rows,
// lowered to StandardLP and solved with certification.

#include "pplp/lp.hpp"

namespace pplp {

struct InequalityProblem {
  std::size_t dim = 0;
  std::vector<RationalVector> le_rows;  // row . x <= le_rhs
  RationalVector le_rhs;
  std::vector<RationalVector> eq_rows;  // row . x == eq_rhs
  RationalVector eq_rhs;
  RationalVector objective;             // maximize objective . x

  void add_le(RationalVector row, Rational rhs);
  void add_eq(RationalVector row, Rational rhs);
};

struct InequalityResult {
  LPStatus status = LPStatus::infeasible;
  RationalVector x;
  Rational value;
};

InequalityResult maximize(const InequalityProblem& problem,
                          const FloatLpBackend& backend = default_float_backend());

}  // namespace pplp
