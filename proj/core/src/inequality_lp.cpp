#include "pplp/inequality_lp.hpp"

namespace pplp {

void InequalityProblem::add_le(RationalVector row, Rational rhs) {
  le_rows.push_back(std::move(row));
  le_rhs.push_back(std::move(rhs));
}

void InequalityProblem::add_eq(RationalVector row, Rational rhs) {
  eq_rows.push_back(std::move(row));
  eq_rhs.push_back(std::move(rhs));
}

InequalityResult maximize(const InequalityProblem& p, const FloatLpBackend& backend) {
  const std::size_t d = p.dim;
  const std::size_t mi = p.le_rows.size();
  const std::size_t me = p.eq_rows.size();
  const std::size_t cols = 2 * d + mi;

  // Columns: x+ (d), x- (d), slacks (mi).
  RationalMatrix a(mi + me, cols);
  RationalVector b(mi + me);
  for (std::size_t i = 0; i < mi; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(p.le_rows[i][j]) == 0) continue;
      a(i, j) = p.le_rows[i][j];
      a(i, d + j) = -p.le_rows[i][j];
    }
    a(i, 2 * d + i) = 1;
    b[i] = p.le_rhs[i];
  }
  for (std::size_t i = 0; i < me; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(p.eq_rows[i][j]) == 0) continue;
      a(mi + i, j) = p.eq_rows[i][j];
      a(mi + i, d + j) = -p.eq_rows[i][j];
    }
    b[mi + i] = p.eq_rhs[i];
  }

  InequalityResult result;
  std::optional<StandardLP> lp;
  if (me == 0) {
    lp.emplace(std::move(a), std::move(b));
  } else {
    lp = StandardLP::with_independent_rows(a, b);
    if (!lp) return result;  // inconsistent equalities
  }
  if (lp->rows() > lp->cols()) return result;

  RationalVector c(cols);
  for (std::size_t j = 0; j < d; ++j) {
    c[j] = p.objective[j];
    c[d + j] = -p.objective[j];
  }
  const LPOutcome out = solve_lp(*lp, c, backend);
  result.status = out.status;
  if (out.status != LPStatus::optimal) return result;
  result.x.resize(d);
  for (std::size_t j = 0; j < d; ++j) result.x[j] = out.x[j] - out.x[d + j];
  result.value = dot(p.objective, result.x);
  return result;
}

}  // namespace pplp
