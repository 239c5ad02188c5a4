#include "pplp/plp.hpp"

#include "pplp/inequality_lp.hpp"

#include <algorithm>
#include <cmath>

namespace pplp {

ParametricObjective::ParametricObjective(std::vector<RationalVector> t) : terms(std::move(t)) {
  if (terms.empty()) throw std::invalid_argument("ParametricObjective: missing constant term");
  for (const auto& term : terms)
    if (term.size() != terms.front().size()) throw std::invalid_argument("ParametricObjective: ragged terms");
}

bool ParametricObjective::homogeneous() const {
  return terms.empty() || std::all_of(terms[0].begin(), terms[0].end(), [](const Rational& v) { return sgn(v) == 0; });
}

RationalVector ParametricObjective::at(std::span<const Rational> mu) const {
  if (mu.size() != parameters()) throw std::invalid_argument("ParametricObjective::at: wrong parameter count");
  RationalVector c = terms.at(0);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (sgn(mu[i]) == 0) continue;
    const auto& term = terms[i + 1];
    for (std::size_t j = 0; j < c.size(); ++j)
      if (sgn(term[j]) != 0) c[j] += mu[i] * term[j];
  }
  return c;
}

Rational ParametricObjective::value(std::span<const Rational> mu, std::span<const Rational> x) const {
  return dot(at(mu), x);
}

Rational ObjectiveTableau::reduced_cost(std::size_t j, std::span<const Rational> mu) const {
  Rational v = coeffs(0, j);
  for (std::size_t i = 0; i < mu.size(); ++i) v += mu[i] * coeffs(i + 1, j);
  return v;
}

bool ObjectiveTableau::optimal_at(std::span<const Rational> mu) const {
  for (std::size_t j = 1; j < coeffs.cols(); ++j)
    if (sgn(reduced_cost(j, mu)) > 0) return false;
  return true;
}

ObjectiveTableau exact_objective(const StandardLP& lp, const Basis& basis, const ParametricObjective& pobj) {
  const std::size_t m = lp.rows();
  if (!basis.well_formed(m, lp.cols()) || pobj.dim() != lp.cols()) throw InvalidBasis();
  const std::size_t terms = pobj.terms.size();
  const std::size_t nn = basis.nonbasic.size();

  // Y(:, i) solves A_B^T y = (C_i)_B; the objective of term i on the affine
  // hull is y^T B + sum_j (C_i[j] - y^T A_j) x_j over nonbasic j.
  RationalMatrix y(m, terms);
  if (m > 0) {
    RationalMatrix rhs(m, terms);
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t i = 0; i < terms; ++i) rhs(k, i) = pobj.terms[i][basis.basic[k]];
    auto solved = solve_basic(lp, basis, rhs, true);
    if (!solved) throw InvalidBasis();
    y = std::move(*solved);
  }

  ObjectiveTableau t;
  t.nonbasic = basis.nonbasic;
  t.coeffs = RationalMatrix(terms, nn + 1);
  for (std::size_t i = 0; i < terms; ++i) {
    Rational constant;
    for (std::size_t r = 0; r < m; ++r)
      if (sgn(y(r, i)) != 0) constant += y(r, i) * lp.b()[r];
    t.coeffs(i, 0) = std::move(constant);
    for (std::size_t j = 0; j < nn; ++j) {
      const Index col = basis.nonbasic[j];
      Rational v = pobj.terms[i][col];
      for (std::size_t r = 0; r < m; ++r)
        if (sgn(y(r, i)) != 0 && sgn(lp.a()(r, col)) != 0) v -= y(r, i) * lp.a()(r, col);
      t.coeffs(i, j + 1) = std::move(v);
    }
  }
  return t;
}

std::variant<ConstraintList, EmptyCone> sign_conditions(const ObjectiveTableau& t) {
  const std::size_t k = t.parameters();
  ConstraintList out;
  RationalVector coeffs(k);
  for (std::size_t j = 1; j < t.coeffs.cols(); ++j) {
    for (std::size_t i = 0; i < k; ++i) coeffs[i] = t.coeffs(i + 1, j);
    auto c = canonicalize(coeffs, -t.coeffs(0, j));
    if (std::holds_alternative<TriviallyFalse>(c)) return EmptyCone{};
    if (auto* cc = std::get_if<CanonicalConstraint>(&c)) out.push_back(std::move(*cc));
  }
  return out;
}

Region::Region(ConstraintList cs, std::vector<RationalVector> ws, RationalVector x, Basis b, RationalVector q)
    : constraints(std::move(cs)),
      witnesses(std::move(ws)),
      optimum(std::move(x)),
      basis(std::move(b)),
      interior_point(std::move(q)) {
  float_constraints.reserve(constraints.size());
  for (const auto& c : constraints) float_constraints.emplace_back(c);
}

bool Region::covers(std::span<const Rational> mu) const {
  return std::all_of(constraints.begin(), constraints.end(), [&](const auto& c) { return c.satisfied_by(mu); });
}

bool Region::covers(std::span<const Rational> mu, std::span<const double> mu_float) const {
  constexpr double kRel = 1e-12;
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const auto& fc = float_constraints[i];
    double v = -fc.bound;
    double scale = std::fabs(fc.bound);
    for (std::size_t j = 0; j < mu_float.size(); ++j) {
      v += fc.coeffs[j] * mu_float[j];
      scale += std::fabs(fc.coeffs[j] * mu_float[j]);
    }
    const double err = kRel * (scale + 1.0) * static_cast<double>(mu_float.size() + 2);
    if (std::isfinite(v) && std::isfinite(err)) {
      if (v > err) return false;
      if (v < -err) continue;
    }
    if (!constraints[i].satisfied_by(mu)) return false;
  }
  return true;
}

RationalVector normalize_probe(std::span<const Rational> probe) {
  const Integer den = common_denominator(probe);
  IntegerVector num(probe.size());
  Integer g = 0;
  for (std::size_t i = 0; i < probe.size(); ++i) {
    num[i] = probe[i].get_num() * (den / probe[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num[i].get_mpz_t());
  }
  RationalVector out(probe.size());
  for (std::size_t i = 0; i < probe.size(); ++i) out[i] = g == 0 ? Rational(0) : Rational(num[i] / g);
  return out;
}

std::optional<RationalVector> region_interior_point(std::size_t dim, std::span<const CanonicalConstraint> cs,
                                                    const FloatLpBackend& backend) {
  if (cs.empty()) return RationalVector(dim);
  InequalityProblem p;
  p.dim = dim + 1;
  for (const auto& c : cs) {
    RationalVector row(dim + 1);
    Integer norm = 0;
    for (std::size_t j = 0; j < dim; ++j) {
      row[j] = c.coeffs[j];
      norm += abs(c.coeffs[j]);
    }
    if (c.is_equality()) {
      p.add_eq(std::move(row), Rational(c.bound));
    } else {
      row[dim] = norm;
      p.add_le(std::move(row), Rational(c.bound));
    }
  }
  RationalVector cap(dim + 1);
  cap[dim] = 1;
  p.add_le(std::move(cap), Rational(1));
  p.objective.assign(dim + 1, Rational(0));
  p.objective[dim] = 1;
  const auto r = maximize(p, backend);
  if (r.status != LPStatus::optimal || sgn(r.x[dim]) <= 0) return std::nullopt;
  return simplify_interior(cs, std::span<const Rational>(r.x).first(dim));
}

namespace {

// Moves a witness towards the interior point so that it strictly satisfies
// every other constraint while still violating its own, then rounds it.
RationalVector refine_witness(const RationalVector& w, const RationalVector& q, const ConstraintList& cs,
                              std::size_t i) {
  const Rational ew = cs[i].excess(w);
  const Rational eq = cs[i].excess(q);
  Rational theta = ew / (2 * (ew - eq));
  if (theta > Rational(1, 2)) theta = Rational(1, 2);
  RationalVector out(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) out[j] = w[j] + theta * (q[j] - w[j]);
  return round_to_grid(out, [&](std::span<const Rational> y) {
    for (std::size_t k = 0; k < cs.size(); ++k) {
      const int s = sgn(cs[k].excess(y));
      if (cs[k].is_equality() ? s != 0 : (k == i ? s <= 0 : s >= 0)) return false;
    }
    return true;
  });
}

std::optional<Region> region_from_conditions(const ConstraintList& conditions, std::size_t k, RationalVector optimum,
                                             Basis basis, bool homogeneous, const PlpOptions& options) {
  auto syn = syntactic_minimize(conditions);
  if (std::holds_alternative<EmptyPolyhedron>(syn)) return std::nullopt;
  const auto& cs = std::get<ConstraintList>(syn);
  auto q = region_interior_point(k, cs, options.float_backend());
  if (!q) return std::nullopt;
  RedundancyOptions ropt = options.redundancy;
  if (!ropt.backend) ropt.backend = &options.float_backend();
  auto irr = eliminate_redundancy(cs, ropt);
  if (std::holds_alternative<EmptyPolyhedron>(irr)) return std::nullopt;
  auto& sys = std::get<IrredundantSystem>(irr);
  for (std::size_t i = 0; i < sys.kept.size(); ++i) {
    if (sys.witnesses[i].empty()) continue;
    sys.witnesses[i] = refine_witness(sys.witnesses[i], *q, sys.kept, i);
    if (homogeneous) sys.witnesses[i] = normalize_probe(sys.witnesses[i]);
  }
  if (homogeneous) *q = normalize_probe(*q);
  return Region(std::move(sys.kept), std::move(sys.witnesses), std::move(optimum), std::move(basis), std::move(*q));
}

}  // namespace

std::optional<Region> build_region(const ObjectiveTableau& tableau, RationalVector optimum, Basis basis,
                                   bool homogeneous, const PlpOptions& options) {
  auto sc = sign_conditions(tableau);
  if (std::holds_alternative<EmptyCone>(sc)) return std::nullopt;
  return region_from_conditions(std::get<ConstraintList>(sc), tableau.parameters(), std::move(optimum),
                                std::move(basis), homogeneous, options);
}

RegionResult compute_region(const StandardLP& lp, const ParametricObjective& pobj, std::span<const Rational> probe_in,
                            BasisTable& bases, const PlpOptions& options, bool trust_float) {
  const bool homogeneous = pobj.homogeneous();
  const RationalVector probe = homogeneous ? normalize_probe(probe_in) : RationalVector(probe_in.begin(), probe_in.end());
  const RationalVector c = pobj.at(probe);

  std::optional<Basis> start;
  Basis basis;
  RationalVector optimum;
  bool have = false;
  if (trust_float) {
    auto fr = float_lp(lp, c, options.float_backend());
    if (fr.status == FloatStatus::optimal && fr.basis.well_formed(lp.rows(), lp.cols())) {
      const auto cl = bases.claim(fr.basis);
      if (cl.kind == BasisTable::Claim::Kind::in_progress) return AlreadySeen{fr.basis, std::nullopt};
      if (cl.kind == BasisTable::Claim::Kind::published) return AlreadySeen{fr.basis, cl.region};
      auto cert = certify(lp, fr.basis, c);
      if (cert.certified) {
        basis = std::move(fr.basis);
        optimum = std::move(cert.x);
        have = true;
      } else {
        bases.fail(fr.basis);
        start = std::move(fr.basis);
      }
    }
  }
  if (!have) {
    auto out = exact_lp(lp, c, start ? &*start : nullptr);
    if (out.status != LPStatus::optimal) {
      throw PlpError(out.status, std::string("LP is ") +
                                     (out.status == LPStatus::infeasible ? "infeasible" : "unbounded") +
                                     " at parameter " + format_vector(probe));
    }
    const auto cl = bases.claim(out.basis);
    if (cl.kind == BasisTable::Claim::Kind::in_progress) return AlreadySeen{out.basis, std::nullopt};
    if (cl.kind == BasisTable::Claim::Kind::published) return AlreadySeen{out.basis, cl.region};
    basis = std::move(out.basis);
    optimum = std::move(out.x);
  }

  const auto tableau = exact_objective(lp, basis, pobj);
  auto sc = sign_conditions(tableau);
  if (std::holds_alternative<EmptyCone>(sc)) {
    bases.fail(basis);
    return EmptyCone{};
  }
  auto region = region_from_conditions(std::get<ConstraintList>(sc), pobj.parameters(), std::move(optimum), basis,
                                       homogeneous, options);
  if (!region) {
    bases.fail(basis);
    return FlatRegion{};
  }
  return std::move(*region);
}

namespace {

struct Segment {
  RationalVector dir;  // probe - interior point
  Rational exit;       // parameter of the exit point along dir
};

std::optional<Segment> exit_segment(const Region& from, std::span<const Rational> probe) {
  const auto& q = from.interior_point;
  Segment seg;
  seg.dir.resize(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) seg.dir[j] = probe[j] - q[j];
  bool found = false;
  for (const auto& c : from.constraints) {
    Rational ad;
    for (std::size_t j = 0; j < q.size(); ++j)
      if (sgn(c.coeffs[j]) != 0) ad += c.coeffs[j] * seg.dir[j];
    if (sgn(ad) <= 0) continue;
    Rational s = -c.excess(q) / ad;
    if (!found || s < seg.exit) {
      seg.exit = std::move(s);
      found = true;
    }
  }
  if (!found || seg.exit >= 1) return std::nullopt;
  return seg;
}

RationalVector along(const RationalVector& q, const RationalVector& dir, const Rational& s) {
  RationalVector p(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) p[j] = q[j] + s * dir[j];
  return p;
}

}  // namespace

std::optional<RationalVector> exit_point(const Region& from, std::span<const Rational> probe) {
  auto seg = exit_segment(from, probe);
  if (!seg) return std::nullopt;
  return along(from.interior_point, seg->dir, seg->exit);
}

bool are_adjacent(const Region* from, const Region& to, std::span<const Rational> probe) {
  if (!from) return true;
  auto f = exit_point(*from, probe);
  return !f || to.covers(*f);
}

RationalVector midpoint(const Region& from, const Region& to, std::span<const Rational> probe) {
  auto seg = exit_segment(from, probe);
  if (!seg) throw std::logic_error("midpoint: probe lies in the source region");
  const auto& q = from.interior_point;
  // Points q + s*dir with s in [exit, 1]; `to` restricts s to an interval.
  Rational lo = seg->exit;
  Rational hi = 1;
  bool miss = false;
  for (const auto& c : to.constraints) {
    Rational ad;
    for (std::size_t j = 0; j < q.size(); ++j)
      if (sgn(c.coeffs[j]) != 0) ad += c.coeffs[j] * seg->dir[j];
    const Rational slack = -c.excess(q);
    if (sgn(ad) == 0) {
      if (sgn(slack) < 0) miss = true;
      continue;
    }
    const Rational s = slack / ad;
    if (sgn(ad) < 0) {
      if (s > lo) lo = s;
    } else if (s < hi) {
      hi = s;
    }
  }
  if (miss || lo > hi) lo = 1;
  if (lo == seg->exit) throw std::logic_error("midpoint: exit point already lies in the target region");
  return along(q, seg->dir, (seg->exit + lo) / 2);
}

RationalVector compute_next(const Region& region, std::size_t i) {
  if (i >= region.constraints.size()) throw std::out_of_range("compute_next: constraint index");
  if (i < region.witnesses.size() && !region.witnesses[i].empty()) return region.witnesses[i];
  // Step from the interior point along the facet normal to half the distance
  // beyond the facet.
  const auto& c = region.constraints[i];
  const auto& q = region.interior_point;
  Rational aa;
  for (const auto& a : c.coeffs) aa += Rational(a * a);
  const Rational s = Rational(3, 2) * (-c.excess(q)) / aa;
  RationalVector p(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) p[j] = q[j] + s * c.coeffs[j];
  return p;
}

}  // namespace pplp
