#include "pplp/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pplp {
namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kCostTol = 1e-9;
constexpr double kFeasTol = 1e-7;

enum class RunResult { optimal, unbounded, stalled };

// Dense tableau with one objective row. Columns [0, n) are structural,
// [n, n + artificials) artificial, the last column is the right-hand side.
class Tableau {
public:
  Tableau(std::size_t m, std::size_t width) : m_(m), width_(width), t_(m * width), obj_(width) {}

  double& at(std::size_t r, std::size_t c) { return t_[r * width_ + c]; }
  double at(std::size_t r, std::size_t c) const { return t_[r * width_ + c]; }
  std::size_t rhs() const { return width_ - 1; }

  std::vector<long> basis;  // basic column per row

  void price(std::span<const double> cost) {
    for (std::size_t j = 0; j < width_; ++j) obj_[j] = j < cost.size() ? cost[j] : 0.0;
    for (std::size_t i = 0; i < m_; ++i) {
      const double cb = static_cast<std::size_t>(basis[i]) < cost.size() ? cost[basis[i]] : 0.0;
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) obj_[j] -= cb * at(i, j);
    }
  }

  double value() const { return -obj_[rhs()]; }

  void pivot(std::size_t r, std::size_t c) {
    const double p = at(r, c);
    for (std::size_t j = 0; j < width_; ++j) at(r, j) /= p;
    at(r, c) = 1.0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) at(i, j) -= f * at(r, j);
      at(i, c) = 0.0;
    }
    const double f = obj_[c];
    if (f != 0.0) {
      for (std::size_t j = 0; j < width_; ++j) obj_[j] -= f * at(r, j);
      obj_[c] = 0.0;
    }
    basis[r] = static_cast<long>(c);
  }

  // Maximizes the priced objective over columns [0, allowed).
  RunResult run(std::size_t allowed) {
    const std::size_t cap = 50 * (m_ + width_) + 1000;
    std::size_t degenerate_run = 0;
    bool bland = false;
    for (std::size_t iter = 0; iter < cap; ++iter) {
      std::size_t enter = allowed;
      double best = kCostTol;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (obj_[j] > best) {
          enter = j;
          if (bland) break;
          best = obj_[j];
        }
      }
      if (enter == allowed) return RunResult::optimal;

      // Two-pass ratio test: the minimum ratio with a small tolerance, then
      // among the rows within it the largest pivot (or the lowest basic
      // index under Bland's rule). Entries below the pivot tolerance are only
      // used when there is nothing else.
      std::size_t leave = m_;
      double ratio = std::numeric_limits<double>::infinity();
      for (double tol : {kPivotTol, 0.0}) {
        for (std::size_t i = 0; i < m_; ++i) {
          const double a = at(i, enter);
          if (a <= tol) continue;
          ratio = std::min(ratio, (std::max(at(i, rhs()), 0.0) + kFeasTol) / a);
        }
        double best_pivot = 0.0;
        for (std::size_t i = 0; i < m_; ++i) {
          const double a = at(i, enter);
          if (a <= tol || std::max(at(i, rhs()), 0.0) / a > ratio) continue;
          const bool better = leave == m_ || (bland ? basis[i] < basis[leave] : a > best_pivot);
          if (better) {
            leave = i;
            best_pivot = a;
          }
        }
        if (leave < m_) break;
      }
      if (leave < m_) ratio = std::max(at(leave, rhs()), 0.0) / at(leave, enter);
      if (leave == m_) return RunResult::unbounded;
      degenerate_run = ratio <= kPivotTol ? degenerate_run + 1 : 0;
      if (degenerate_run > 30) bland = true;
      pivot(leave, enter);
    }
    return RunResult::stalled;
  }

  std::span<double> objective() { return obj_; }

private:
  std::size_t m_;
  std::size_t width_;
  std::vector<double> t_;
  std::vector<double> obj_;
};

}  // namespace

FloatBackendResult DenseSimplexBackend::solve(const StandardLP& lp, std::span<const Rational> c) const {
  std::vector<double> cf(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) cf[j] = c[j].get_d();
  return solve(lp, std::span<const double>(cf));
}

FloatBackendResult DenseSimplexBackend::solve(const StandardLP& lp, std::span<const double> c) const {
  const std::size_t m = lp.rows();
  const std::size_t n = lp.cols();
  FloatBackendResult result;
  const auto a = lp.a_float();
  const auto b = lp.b_float();

  if (m == 0) {
    const bool bounded = std::all_of(c.begin(), c.end(), [](double v) { return v <= kCostTol; });
    result.status = bounded ? FloatStatus::optimal : FloatStatus::unbounded;
    if (bounded) result.basis = Basis::from_basic({}, n);
    return result;
  }

  // Crash basis from unit columns; artificial columns for the remaining rows.
  // Rows are flipped to make b >= 0 and scaled to unit max norm.
  std::vector<double> row_scale(m, 1.0);
  for (std::size_t i = 0; i < m; ++i) {
    double big = 0.0;
    for (std::size_t j = 0; j < n; ++j) big = std::max(big, std::fabs(a[i * n + j]));
    if (big > 0.0) row_scale[i] = 1.0 / big;
    if (b[i] < 0) row_scale[i] = -row_scale[i];
  }
  std::vector<long> row_basis(m, -1);
  for (std::size_t j = 0; j < n; ++j) {
    long row = -1;
    bool unit = true;
    for (std::size_t i = 0; i < m && unit; ++i) {
      const double v = a[i * n + j] * row_scale[i];
      if (v == 0.0) continue;
      if (row >= 0 || v < 0.0) unit = false;
      row = static_cast<long>(i);
    }
    if (unit && row >= 0 && row_basis[row] < 0) row_basis[row] = static_cast<long>(j);
  }
  std::size_t artificials = 0;
  for (long rb : row_basis)
    if (rb < 0) ++artificials;

  Tableau t(m, n + artificials + 1);
  t.basis.assign(m, -1);
  std::size_t next_art = n;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = a[i * n + j] * row_scale[i];
    t.at(i, t.rhs()) = b[i] * row_scale[i];
    if (row_basis[i] >= 0) {
      const double p = t.at(i, static_cast<std::size_t>(row_basis[i]));
      for (std::size_t j = 0; j < t.rhs() + 1; ++j) t.at(i, j) /= p;
      t.basis[i] = row_basis[i];
    } else {
      t.at(i, next_art) = 1.0;
      t.basis[i] = static_cast<long>(next_art++);
    }
  }

  double scale = 1.0;
  for (std::size_t i = 0; i < m; ++i) scale = std::max(scale, std::fabs(b[i] * row_scale[i]));

  if (artificials > 0) {
    std::vector<double> phase1(n + artificials, 0.0);
    for (std::size_t j = n; j < n + artificials; ++j) phase1[j] = -1.0;
    t.price(phase1);
    if (auto rr = t.run(n + artificials); rr != RunResult::optimal) return result;
    if (t.value() < -kFeasTol * scale) {
      result.status = FloatStatus::infeasible;
      return result;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (static_cast<std::size_t>(t.basis[i]) < n) continue;
      // Largest entry, however small: rows can legitimately mix magnitudes
      // far apart, and a bad pivot is caught by certification anyway.
      std::size_t best = n;
      double mag = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (std::fabs(t.at(i, j)) > mag) {
          mag = std::fabs(t.at(i, j));
          best = j;
        }
      }
      if (best == n) return result;  // dependent row
      t.pivot(i, best);
    }
  }

  t.price(c);
  switch (t.run(n)) {
    case RunResult::optimal: break;
    case RunResult::unbounded: result.status = FloatStatus::unbounded; return result;
    case RunResult::stalled: return result;
  }
  std::vector<Index> basic(m);
  for (std::size_t i = 0; i < m; ++i) basic[i] = static_cast<Index>(t.basis[i]);
  result.basis = Basis::from_basic(std::move(basic), n);
  result.status = FloatStatus::optimal;
  return result;
}

const FloatLpBackend& default_float_backend() {
  static const DenseSimplexBackend backend;
  return backend;
}

}  // namespace pplp
