#include "pplp/lp.hpp"

#include <algorithm>

namespace pplp {
namespace {

enum class Run { optimal, unbounded };

// Rational tableau; columns [0, n) structural, then artificials, then rhs.
struct ExactTableau {
  std::size_t m = 0;
  std::size_t width = 0;
  std::vector<Rational> t;
  std::vector<Rational> obj;
  std::vector<std::size_t> basis;

  Rational& at(std::size_t r, std::size_t c) { return t[r * width + c]; }
  std::size_t rhs() const { return width - 1; }

  void price(std::span<const Rational> cost) {
    obj.assign(width, Rational(0));
    for (std::size_t j = 0; j < cost.size(); ++j) obj[j] = cost[j];
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] >= cost.size() || sgn(cost[basis[i]]) == 0) continue;
      const Rational cb = cost[basis[i]];
      for (std::size_t j = 0; j < width; ++j)
        if (sgn(at(i, j)) != 0) obj[j] -= cb * at(i, j);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = at(r, c);
    for (std::size_t j = 0; j < width; ++j)
      if (sgn(at(r, j)) != 0) at(r, j) /= p;
    auto eliminate = [&](auto&& row_at) {
      const Rational f = row_at(c);
      if (sgn(f) == 0) return;
      for (std::size_t j = 0; j < width; ++j) {
        const Rational& pr = at(r, j);
        if (sgn(pr) != 0) row_at(j) -= f * pr;
      }
    };
    for (std::size_t i = 0; i < m; ++i) {
      if (i != r) eliminate([&](std::size_t j) -> Rational& { return at(i, j); });
    }
    eliminate([&](std::size_t j) -> Rational& { return obj[j]; });
    basis[r] = c;
  }

  // Bland's rule: least entering index, least leaving basic index on ties.
  Run run(std::size_t allowed) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (sgn(obj[j]) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return Run::optimal;
      std::size_t leave = m;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (sgn(at(i, enter)) <= 0) continue;
        Rational q = at(i, rhs()) / at(i, enter);
        if (leave == m || q < best || (q == best && basis[i] < basis[leave])) {
          best = std::move(q);
          leave = i;
        }
      }
      if (leave == m) return Run::unbounded;
      pivot(leave, enter);
    }
  }
};

LPOutcome finish(ExactTableau& tab, std::size_t n) {
  LPOutcome out;
  out.status = LPStatus::optimal;
  std::vector<Index> basic(tab.m);
  out.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < tab.m; ++i) {
    basic[i] = static_cast<Index>(tab.basis[i]);
    out.x[tab.basis[i]] = tab.at(i, tab.rhs());
  }
  out.basis = Basis::from_basic(std::move(basic), n);
  return out;
}

// Tableau of a nonsingular start basis, with one extra column (index n)
// before the right-hand side. If the basis is primal infeasible, that column
// becomes an artificial variable with -1 on every negative row and is pivoted
// in on the most negative one, which makes all rows feasible.
struct WarmStart {
  ExactTableau tab;
  bool artificial = false;
};

std::optional<WarmStart> warm_start(const StandardLP& lp, const Basis& start) {
  const std::size_t m = lp.rows();
  const std::size_t n = lp.cols();
  if (!start.well_formed(m, n)) return std::nullopt;
  RationalMatrix full(m, n + 1);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) full(r, j) = lp.a()(r, j);
    full(r, n) = lp.b()[r];
  }
  auto solved = solve_basic(lp, start, full);
  if (!solved) return std::nullopt;
  WarmStart ws;
  ExactTableau& tab = ws.tab;
  tab.m = m;
  tab.width = n + 2;
  tab.t.assign(m * tab.width, Rational(0));
  tab.basis.assign(start.basic.begin(), start.basic.end());
  std::size_t worst = m;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = (*solved)(i, j);
    tab.at(i, tab.rhs()) = (*solved)(i, n);
    if (sgn(tab.at(i, tab.rhs())) < 0) {
      tab.at(i, n) = -1;
      if (worst == m || tab.at(i, tab.rhs()) < tab.at(worst, tab.rhs())) worst = i;
    }
  }
  if (worst < m) {
    ws.artificial = true;
    tab.obj.assign(tab.width, Rational(0));
    tab.pivot(worst, n);
  }
  return ws;
}

}  // namespace

LPOutcome exact_lp(const StandardLP& lp, std::span<const Rational> c, const Basis* start) {
  const std::size_t m = lp.rows();
  const std::size_t n = lp.cols();
  if (c.size() != n) throw std::invalid_argument("exact_lp: |c| != n");

  if (m == 0) {
    LPOutcome out;
    if (std::any_of(c.begin(), c.end(), [](const Rational& v) { return sgn(v) > 0; })) {
      out.status = LPStatus::unbounded;
      return out;
    }
    out.status = LPStatus::optimal;
    out.basis = Basis::from_basic({}, n);
    out.x.assign(n, Rational(0));
    return out;
  }

  if (start) {
    if (auto ws = warm_start(lp, *start)) {
      ExactTableau& tab = ws->tab;
      if (ws->artificial) {
        std::vector<Rational> phase1(n + 1, Rational(0));
        phase1[n] = -1;
        tab.price(phase1);
        tab.run(n + 1);  // bounded by 0
        if (sgn(tab.obj[tab.rhs()]) != 0) return LPOutcome{LPStatus::infeasible, {}, {}};
        for (std::size_t i = 0; i < m; ++i) {
          if (tab.basis[i] != n) continue;
          std::size_t col = n;
          for (std::size_t j = 0; j < n && col == n; ++j)
            if (sgn(tab.at(i, j)) != 0) col = j;
          if (col == n) throw std::logic_error("exact_lp: linearly dependent rows");
          tab.pivot(i, col);
        }
      }
      tab.price(c);
      if (tab.run(n) == Run::unbounded) return LPOutcome{LPStatus::unbounded, {}, {}};
      return finish(tab, n);
    }
  }

  // Phase 1: one artificial per row after making B >= 0.
  ExactTableau tab;
  tab.m = m;
  tab.width = n + m + 1;
  tab.t.assign(m * tab.width, Rational(0));
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sgn(lp.b()[i]) < 0;
    for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = flip ? Rational(-lp.a()(i, j)) : lp.a()(i, j);
    tab.at(i, tab.rhs()) = flip ? Rational(-lp.b()[i]) : lp.b()[i];
    tab.at(i, n + i) = 1;
    tab.basis[i] = n + i;
  }
  std::vector<Rational> phase1(n + m, Rational(0));
  for (std::size_t j = n; j < n + m; ++j) phase1[j] = -1;
  tab.price(phase1);
  tab.run(n + m);  // bounded by 0
  if (sgn(tab.obj[tab.rhs()]) != 0) return LPOutcome{LPStatus::infeasible, {}, {}};

  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(tab.at(i, j)) != 0) {
        col = j;
        break;
      }
    }
    if (col == n) throw std::logic_error("exact_lp: linearly dependent rows");
    tab.pivot(i, col);
  }

  tab.price(c);
  if (tab.run(n) == Run::unbounded) return LPOutcome{LPStatus::unbounded, {}, {}};
  return finish(tab, n);
}

}  // namespace pplp
