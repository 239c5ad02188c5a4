#include "pplp/projection.hpp"

#include <algorithm>
#include <numeric>

namespace pplp {

std::vector<std::size_t> kept_variables(std::size_t dim, std::span<const std::size_t> eliminate) {
  std::vector<bool> gone(dim, false);
  for (std::size_t j : eliminate) {
    if (j >= dim) throw std::out_of_range("eliminated variable " + std::to_string(j) + " out of range");
    gone[j] = true;
  }
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < dim; ++j)
    if (!gone[j]) kept.push_back(j);
  return kept;
}

std::variant<ProjectionEncoding, EmptyPolyhedron, NotFullDim> build_projection_plp(
    const Polyhedron& p, std::span<const std::size_t> eliminate, const FloatLpBackend& backend) {
  if (p.equality_count() > 0) return NotFullDim{};
  auto ip = interior_point(p, backend);
  if (std::holds_alternative<EmptyPolyhedron>(ip)) return EmptyPolyhedron{};
  if (std::holds_alternative<NotFullDim>(ip)) return NotFullDim{};

  ProjectionEncoding enc;
  enc.kept = kept_variables(p.dim, eliminate);
  enc.eliminated.assign(eliminate.begin(), eliminate.end());
  std::sort(enc.eliminated.begin(), enc.eliminated.end());
  enc.eliminated.erase(std::unique(enc.eliminated.begin(), enc.eliminated.end()), enc.eliminated.end());
  enc.interior = std::move(std::get<RationalVector>(ip));
  enc.rows = p.constraints;
  const std::size_t m = enc.rows.size();

  RationalMatrix a(enc.eliminated.size() + 1, m);
  RationalVector rhs(enc.eliminated.size() + 1);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = enc.rows[i];
    for (std::size_t e = 0; e < enc.eliminated.size(); ++e) a(e, i) = row.coeffs[enc.eliminated[e]];
    a(enc.eliminated.size(), i) = -row.excess(enc.interior);
  }
  rhs.back() = 1;
  if (auto lp = StandardLP::with_independent_rows(a, rhs)) {
    enc.cancellation_rows = lp->rows() - 1;
    enc.lambda_lp = std::move(*lp);
  } else {
    // Normalization depends on the cancellation rows: only lambda = 0
    // cancels, which the normalization excludes.
    RationalMatrix z(1, m);
    enc.lambda_lp = StandardLP(std::move(z), RationalVector{Rational(1)});
  }

  std::vector<RationalVector> terms(enc.kept.size() + 1, RationalVector(m));
  for (std::size_t i = 0; i < m; ++i) {
    terms[0][i] = -Rational(enc.rows[i].bound);
    for (std::size_t k = 0; k < enc.kept.size(); ++k) terms[k + 1][i] = enc.rows[i].coeffs[enc.kept[k]];
  }
  enc.pobj = ParametricObjective(std::move(terms));
  return enc;
}

Canonicalized constraint_from_multipliers(const ProjectionEncoding& enc, std::span<const Rational> lambda) {
  const std::size_t d = enc.interior.size();
  RationalVector full(d);
  Rational bound;
  for (std::size_t i = 0; i < enc.rows.size(); ++i) {
    if (sgn(lambda[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (sgn(enc.rows[i].coeffs[j]) != 0) full[j] += lambda[i] * enc.rows[i].coeffs[j];
    bound += lambda[i] * enc.rows[i].bound;
  }
  for (std::size_t j : enc.eliminated)
    if (sgn(full[j]) != 0) throw std::logic_error("projection: eliminated coefficient does not cancel");
  RationalVector kept(enc.kept.size());
  for (std::size_t k = 0; k < enc.kept.size(); ++k) kept[k] = full[enc.kept[k]];
  return canonicalize(kept, bound);
}

namespace {

// Projection of a full-dimensional, inequality-only polyhedron.
ProjectionResult project_full_dim(const Polyhedron& q, std::span<const std::size_t> eliminate,
                                  const ProjectOptions& options) {
  const auto kept = kept_variables(q.dim, eliminate);
  ProjectionResult res;
  if (q.constraints.empty() || kept.empty()) {
    res.polyhedron = Polyhedron::universe(kept.size());
    return res;
  }
  auto built = build_projection_plp(q, eliminate, options.plp.float_backend());
  if (std::holds_alternative<EmptyPolyhedron>(built)) {
    res.polyhedron = Polyhedron::empty(kept.size());
    return res;
  }
  if (std::holds_alternative<NotFullDim>(built)) throw std::logic_error("projection: reduced system is flat");
  auto& enc = std::get<ProjectionEncoding>(built);

  const RationalVector zero(enc.lambda_lp.cols());
  if (solve_lp(enc.lambda_lp, zero, options.plp.float_backend()).status != LPStatus::optimal) {
    res.polyhedron = Polyhedron::universe(kept.size());
    if (options.keep_solution) res.encoding = std::move(enc);
    return res;
  }

  PlpOptions plp = options.plp;
  if (plp.initial_probe.empty()) {
    // At the kept part of the interior point every multiplier is optimal,
    // so start one unit away from it.
    for (std::size_t k : enc.kept) plp.initial_probe.push_back(enc.interior[k] + 1);
  }
  auto sol = solve_parallel(enc.lambda_lp, enc.pobj, options.threads, options.scheduler, plp);

  ConstraintList cs;
  for (const auto& r : sol.regions) {
    auto c = constraint_from_multipliers(enc, r.optimum);
    if (std::holds_alternative<TriviallyFalse>(c)) {
      res.polyhedron = Polyhedron::empty(kept.size());
      return res;
    }
    if (auto* cc = std::get_if<CanonicalConstraint>(&c)) cs.push_back(std::move(*cc));
  }
  RedundancyOptions ropt = plp.redundancy;
  if (!ropt.backend) ropt.backend = &plp.float_backend();
  auto min = minimize_constraints(cs, ropt);
  if (std::holds_alternative<EmptyPolyhedron>(min)) {
    res.polyhedron = Polyhedron::empty(kept.size());
  } else {
    auto out = std::move(std::get<IrredundantSystem>(min).kept);
    std::sort(out.begin(), out.end());
    res.polyhedron = Polyhedron(kept.size(), std::move(out));
  }
  res.stats = sol.stats;
  if (options.keep_solution) {
    res.solution = std::move(sol);
    res.encoding = std::move(enc);
  }
  return res;
}

}  // namespace

ProjectionResult project_detailed(const Polyhedron& p, std::span<const std::size_t> eliminate,
                                  const ProjectOptions& options) {
  const auto kept = kept_variables(p.dim, eliminate);
  std::vector<bool> is_kept(p.dim, false);
  for (std::size_t k : kept) is_kept[k] = true;
  const std::size_t dk = kept.size();
  ProjectionResult empty_result;
  empty_result.polyhedron = Polyhedron::empty(dk);
  if (p.is_marked_empty()) return empty_result;

  const FloatLpBackend& backend = options.plp.float_backend();
  auto split = split_implicit_equalities(p, backend);
  if (std::holds_alternative<EmptyPolyhedron>(split)) return empty_result;
  auto& s = std::get<AffineSplit>(split);

  // Pivot on eliminated variables first so that rows pivoting on a kept
  // variable involve kept variables only.
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < p.dim; ++j)
    if (!is_kept[j]) order.push_back(j);
  order.insert(order.end(), kept.begin(), kept.end());
  const auto ech = equality_echelon(s.equalities, p.dim, order);
  if (ech.inconsistent) return empty_result;

  std::vector<std::size_t> kept_pos(p.dim, 0);
  for (std::size_t k = 0; k < dk; ++k) kept_pos[kept[k]] = k;

  ConstraintList equalities;
  std::vector<bool> pivot(p.dim, false);
  for (std::size_t i = 0; i < ech.rows.size(); ++i) {
    pivot[ech.pivots[i]] = true;
    if (!is_kept[ech.pivots[i]]) continue;
    RationalVector row(dk);
    for (std::size_t j = 0; j < p.dim; ++j) {
      if (sgn(ech.rows[i][j]) == 0) continue;
      if (!is_kept[j]) throw std::logic_error("projection: equality echelon mixes eliminated variables");
      row[kept_pos[j]] = ech.rows[i][j];
    }
    equalities.push_back(std::get<CanonicalConstraint>(canonicalize(row, ech.rows[i][p.dim], Relation::equal)));
  }

  // The remaining inequalities live on the non-pivot (free) variables.
  std::vector<std::size_t> free_vars;
  for (std::size_t j = 0; j < p.dim; ++j)
    if (!pivot[j]) free_vars.push_back(j);
  ConstraintList reduced;
  for (const auto& c : s.inequalities) {
    auto r = substitute_pivots(c, ech);
    if (std::holds_alternative<TriviallyFalse>(r)) return empty_result;
    auto* cc = std::get_if<CanonicalConstraint>(&r);
    if (!cc) continue;
    RationalVector row(free_vars.size());
    for (std::size_t f = 0; f < free_vars.size(); ++f) row[f] = cc->coeffs[free_vars[f]];
    reduced.push_back(std::get<CanonicalConstraint>(canonicalize(row, Rational(cc->bound))));
  }
  std::vector<std::size_t> free_eliminated;
  std::vector<std::size_t> free_kept;  // original indices
  for (std::size_t f = 0; f < free_vars.size(); ++f) {
    if (is_kept[free_vars[f]])
      free_kept.push_back(free_vars[f]);
    else
      free_eliminated.push_back(f);
  }

  ProjectionResult res = project_full_dim(Polyhedron(free_vars.size(), std::move(reduced)), free_eliminated, options);
  if (res.polyhedron.is_marked_empty()) {
    res.polyhedron = Polyhedron::empty(dk);
    return res;
  }
  ConstraintList out = std::move(equalities);
  std::sort(out.begin(), out.end());
  for (const auto& c : res.polyhedron.constraints) {
    RationalVector row(dk);
    for (std::size_t f = 0; f < free_kept.size(); ++f) row[kept_pos[free_kept[f]]] = c.coeffs[f];
    out.push_back(std::get<CanonicalConstraint>(canonicalize(row, Rational(c.bound), c.relation)));
  }
  res.polyhedron = Polyhedron(dk, std::move(out));
  return res;
}

Polyhedron project(const Polyhedron& p, std::span<const std::size_t> eliminate, const ProjectOptions& options) {
  return project_detailed(p, eliminate, options).polyhedron;
}

ProjectionResult convex_hull_detailed(const Polyhedron& p1, const Polyhedron& p2, const ProjectOptions& options) {
  if (p1.dim != p2.dim) throw std::invalid_argument("convex_hull: dimension mismatch");
  const std::size_t d = p1.dim;
  const auto& backend = options.plp.float_backend();
  auto is_empty = [&](const Polyhedron& p) {
    return p.is_marked_empty() || std::holds_alternative<EmptyPolyhedron>(split_implicit_equalities(p, backend));
  };
  const bool e1 = is_empty(p1), e2 = is_empty(p2);
  if (e1 || e2) {
    ProjectionResult res;
    res.polyhedron = e1 && e2 ? Polyhedron::empty(d) : canonical_form(e1 ? p2 : p1);
    return res;
  }

  // Variables: x (0..d-1), y (d..2d-1), s (2d).
  const std::size_t n = 2 * d + 1;
  ConstraintList lifted;
  auto add = [&](RationalVector row, const Rational& b, Relation rel) {
    auto c = canonicalize(row, b, rel);
    if (auto* cc = std::get_if<CanonicalConstraint>(&c)) lifted.push_back(std::move(*cc));
  };
  for (const auto& c : p1.constraints) {
    RationalVector row(n);
    for (std::size_t j = 0; j < d; ++j) row[d + j] = c.coeffs[j];
    row[2 * d] = -Rational(c.bound);
    add(std::move(row), Rational(0), c.relation);
  }
  for (const auto& c : p2.constraints) {
    RationalVector row(n);
    for (std::size_t j = 0; j < d; ++j) {
      row[j] = c.coeffs[j];
      row[d + j] = -Rational(c.coeffs[j]);
    }
    row[2 * d] = c.bound;
    add(std::move(row), Rational(c.bound), c.relation);
  }
  RationalVector lo(n), hi(n);
  lo[2 * d] = -1;
  hi[2 * d] = 1;
  add(std::move(lo), Rational(0), Relation::less_equal);
  add(std::move(hi), Rational(1), Relation::less_equal);

  std::vector<std::size_t> eliminate(d + 1);
  std::iota(eliminate.begin(), eliminate.end(), d);
  return project_detailed(Polyhedron(n, std::move(lifted)), eliminate, options);
}

Polyhedron convex_hull(const Polyhedron& p1, const Polyhedron& p2, const ProjectOptions& options) {
  return convex_hull_detailed(p1, p2, options).polyhedron;
}

}  // namespace pplp
