#include "pplp/lp.hpp"

#include <algorithm>
#include <numeric>

namespace pplp {

StandardLP::StandardLP(RationalMatrix a, RationalVector b) : a_(std::move(a)), b_(std::move(b)) {
  if (b_.size() != a_.rows()) throw std::invalid_argument("StandardLP: |B| != rows(A)");
  if (a_.rows() > a_.cols()) throw std::invalid_argument("StandardLP: more rows than columns");
  a_float_.resize(a_.rows() * a_.cols());
  for (std::size_t i = 0; i < a_float_.size(); ++i) a_float_[i] = a_.entries()[i].get_d();
  b_float_.resize(b_.size());
  for (std::size_t i = 0; i < b_.size(); ++i) b_float_[i] = b_[i].get_d();
}

std::optional<StandardLP> StandardLP::with_independent_rows(const RationalMatrix& a, const RationalVector& b) {
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), aug.row(r).begin());
    aug(r, a.cols()) = b[r];
  }
  // Consistency: rank(A) must equal rank([A | B]).
  const auto kept = independent_rows(a);
  if (independent_rows(aug).size() != kept.size()) return std::nullopt;
  RationalMatrix ra(kept.size(), a.cols());
  RationalVector rb(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::copy(a.row(kept[i]).begin(), a.row(kept[i]).end(), ra.row(i).begin());
    rb[i] = b[kept[i]];
  }
  return StandardLP(std::move(ra), std::move(rb));
}

Basis Basis::from_basic(std::vector<Index> basic, std::size_t n) {
  Basis b;
  std::sort(basic.begin(), basic.end());
  b.basic = std::move(basic);
  std::vector<bool> is_basic(n, false);
  for (Index i : b.basic) is_basic.at(i) = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_basic[i]) b.nonbasic.push_back(static_cast<Index>(i));
  return b;
}

Basis Basis::from_nonbasic(std::vector<Index> nonbasic, std::size_t n) {
  Basis b;
  std::sort(nonbasic.begin(), nonbasic.end());
  b.nonbasic = std::move(nonbasic);
  std::vector<bool> is_nonbasic(n, false);
  for (Index i : b.nonbasic) is_nonbasic.at(i) = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_nonbasic[i]) b.basic.push_back(static_cast<Index>(i));
  return b;
}

bool Basis::well_formed(std::size_t m, std::size_t n) const {
  if (basic.size() != m || nonbasic.size() + m != n) return false;
  std::vector<bool> seen(n, false);
  for (auto list : {&basic, &nonbasic}) {
    for (Index i : *list) {
      if (i >= n || seen[i]) return false;
      seen[i] = true;
    }
  }
  return true;
}

std::string format_basis(const Basis& b) {
  std::string out = "{";
  for (std::size_t i = 0; i < b.nonbasic.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(b.nonbasic[i]);
  }
  return out + "}";
}

std::optional<RationalMatrix> solve_basic(const StandardLP& lp, const Basis& basis, const RationalMatrix& rhs,
                                          bool transposed) {
  const std::size_t m = lp.rows();
  if (basis.basic.size() != m || rhs.rows() != m) throw std::invalid_argument("solve_basic: shape mismatch");
  const std::size_t w = rhs.cols();
  const auto& a = lp.a();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(m, none);   // row -> basic position of its singleton column
  std::vector<std::size_t> single(m, none);  // basic position -> row of its only entry
  for (std::size_t k = 0; k < m; ++k) {
    const Index col = basis.basic[k];
    std::size_t row = none;
    std::size_t nnz = 0;
    for (std::size_t i = 0; i < m && nnz < 2; ++i)
      if (sgn(a(i, col)) != 0) {
        row = i;
        ++nnz;
      }
    if (nnz == 0) return std::nullopt;
    if (nnz == 1 && owner[row] == none) {
      owner[row] = k;
      single[k] = row;
    }
  }
  std::vector<std::size_t> core_cols;
  std::vector<std::size_t> core_rows;
  for (std::size_t k = 0; k < m; ++k)
    if (single[k] == none) core_cols.push_back(k);
  for (std::size_t i = 0; i < m; ++i)
    if (owner[i] == none) core_rows.push_back(i);
  const std::size_t c = core_cols.size();

  RationalMatrix x(m, w);
  if (!transposed) {
    // Core rows only involve core columns.
    if (c > 0) {
      RationalMatrix core(c, c);
      RationalMatrix crhs(c, w);
      for (std::size_t p = 0; p < c; ++p) {
        for (std::size_t q = 0; q < c; ++q) core(p, q) = a(core_rows[p], basis.basic[core_cols[q]]);
        for (std::size_t j = 0; j < w; ++j) crhs(p, j) = rhs(core_rows[p], j);
      }
      auto sol = solve_linear_systems(core, crhs);
      if (!sol) return std::nullopt;
      for (std::size_t q = 0; q < c; ++q)
        for (std::size_t j = 0; j < w; ++j) x(core_cols[q], j) = (*sol)(q, j);
    }
    for (std::size_t k = 0; k < m; ++k) {
      if (single[k] == none) continue;
      const std::size_t row = single[k];
      const Rational& pivot = a(row, basis.basic[k]);
      for (std::size_t j = 0; j < w; ++j) {
        Rational v = rhs(row, j);
        for (std::size_t q = 0; q < c; ++q) {
          const Rational& coef = a(row, basis.basic[core_cols[q]]);
          if (sgn(coef) != 0 && sgn(x(core_cols[q], j)) != 0) v -= coef * x(core_cols[q], j);
        }
        x(k, j) = v / pivot;
      }
    }
  } else {
    // Equation k: sum_i a(i, basic[k]) y_i = rhs_k. Singleton equations fix
    // the y of their row directly.
    for (std::size_t k = 0; k < m; ++k) {
      if (single[k] == none) continue;
      const std::size_t row = single[k];
      for (std::size_t j = 0; j < w; ++j) x(row, j) = rhs(k, j) / a(row, basis.basic[k]);
    }
    if (c > 0) {
      RationalMatrix core(c, c);
      RationalMatrix crhs(c, w);
      for (std::size_t p = 0; p < c; ++p) {
        const Index col = basis.basic[core_cols[p]];
        for (std::size_t q = 0; q < c; ++q) core(p, q) = a(core_rows[q], col);
        for (std::size_t j = 0; j < w; ++j) {
          Rational v = rhs(core_cols[p], j);
          for (std::size_t i = 0; i < m; ++i)
            if (owner[i] != none && sgn(a(i, col)) != 0 && sgn(x(i, j)) != 0) v -= a(i, col) * x(i, j);
          crhs(p, j) = std::move(v);
        }
      }
      auto sol = solve_linear_systems(core, crhs);
      if (!sol) return std::nullopt;
      for (std::size_t q = 0; q < c; ++q)
        for (std::size_t j = 0; j < w; ++j) x(core_rows[q], j) = (*sol)(q, j);
    }
  }
  return x;
}

FloatBackendResult float_lp(const StandardLP& lp, std::span<const Rational> c, const FloatLpBackend& backend) {
  if (c.size() != lp.cols()) throw std::invalid_argument("float_lp: |c| != n");
  return backend.solve(lp, c);
}

std::optional<RationalVector> exact_point(const StandardLP& lp, const Basis& basis) {
  if (!basis.well_formed(lp.rows(), lp.cols())) return std::nullopt;
  auto xb = solve_basic(lp, basis, RationalMatrix(lp.rows(), 1, lp.b()));
  if (!xb) return std::nullopt;
  RationalVector x(lp.cols());
  for (std::size_t k = 0; k < basis.basic.size(); ++k) x[basis.basic[k]] = std::move((*xb)(k, 0));
  return x;
}

RationalVector reduced_costs(const StandardLP& lp, const Basis& basis, std::span<const Rational> c) {
  if (!basis.well_formed(lp.rows(), lp.cols())) throw InvalidBasis();
  const std::size_t m = lp.rows();
  RationalMatrix cb(m, 1);
  for (std::size_t k = 0; k < m; ++k) cb(k, 0) = c[basis.basic[k]];
  // y solves A_B^T y = c_B; alpha_j = c_j - y^T A_j.
  auto ym = solve_basic(lp, basis, cb, true);
  if (!ym) throw InvalidBasis();
  const RationalVector y = ym->column(0);
  RationalVector alpha(basis.nonbasic.size());
  for (std::size_t j = 0; j < basis.nonbasic.size(); ++j) {
    const Index col = basis.nonbasic[j];
    Rational v = c[col];
    for (std::size_t r = 0; r < m; ++r) {
      if (sgn(y[r]) != 0 && sgn(lp.a()(r, col)) != 0) v -= y[r] * lp.a()(r, col);
    }
    alpha[j] = std::move(v);
  }
  return alpha;
}

Certificate certify(const StandardLP& lp, const Basis& basis, std::span<const Rational> c) {
  Certificate cert;
  auto x = exact_point(lp, basis);
  if (!x) return cert;
  if (std::any_of(x->begin(), x->end(), [](const Rational& v) { return sgn(v) < 0; })) return cert;
  const auto alpha = reduced_costs(lp, basis, c);
  if (std::any_of(alpha.begin(), alpha.end(), [](const Rational& v) { return sgn(v) > 0; })) return cert;
  cert.certified = true;
  cert.x = std::move(*x);
  return cert;
}

LPOutcome solve_lp(const StandardLP& lp, std::span<const Rational> c, const FloatLpBackend& backend) {
  const auto fr = float_lp(lp, c, backend);
  if (fr.status == FloatStatus::optimal) {
    auto cert = certify(lp, fr.basis, c);
    if (cert.certified) return LPOutcome{LPStatus::optimal, fr.basis, std::move(cert.x)};
    return exact_lp(lp, c, &fr.basis);
  }
  return exact_lp(lp, c);
}

}  // namespace pplp
