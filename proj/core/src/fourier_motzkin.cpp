#include "pplp/fourier_motzkin.hpp"

#include "pplp/projection.hpp"

#include <algorithm>

namespace pplp {

Polyhedron fm_project(const Polyhedron& p, std::span<const std::size_t> eliminate, const FmOptions& options) {
  const auto kept = kept_variables(p.dim, eliminate);
  if (p.is_marked_empty()) return Polyhedron::empty(kept.size());

  ConstraintList cs;
  for (const auto& c : p.constraints) {
    if (!c.is_equality()) {
      cs.push_back(c);
      continue;
    }
    CanonicalConstraint le = c, ge = c;
    le.relation = ge.relation = Relation::less_equal;
    for (auto& a : ge.coeffs) a = -a;
    ge.bound = -ge.bound;
    cs.push_back(std::move(le));
    cs.push_back(std::move(ge));
  }
  auto syn = syntactic_minimize(cs);
  if (std::holds_alternative<EmptyPolyhedron>(syn)) return Polyhedron::empty(kept.size());
  cs = std::move(std::get<ConstraintList>(syn));

  std::vector<std::size_t> order(eliminate.begin(), eliminate.end());
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  for (std::size_t j : order) {
    ConstraintList next, upper, lower;
    for (auto& c : cs) {
      const int s = sgn(c.coeffs[j]);
      if (s > 0)
        upper.push_back(std::move(c));
      else if (s < 0)
        lower.push_back(std::move(c));
      else
        next.push_back(std::move(c));
    }
    if (upper.size() * lower.size() > options.cap) throw OracleCapExceeded(upper.size() * lower.size());
    for (const auto& u : upper) {
      for (const auto& l : lower) {
        const Integer fu = -l.coeffs[j];
        const Integer fl = u.coeffs[j];
        RationalVector row(p.dim);
        for (std::size_t k = 0; k < p.dim; ++k) row[k] = fu * u.coeffs[k] + fl * l.coeffs[k];
        auto c = canonicalize(row, Rational(fu * u.bound + fl * l.bound));
        if (std::holds_alternative<TriviallyFalse>(c)) return Polyhedron::empty(kept.size());
        if (auto* cc = std::get_if<CanonicalConstraint>(&c)) next.push_back(std::move(*cc));
      }
    }
    auto min = minimize_constraints(next, options.redundancy);
    if (std::holds_alternative<EmptyPolyhedron>(min)) return Polyhedron::empty(kept.size());
    cs = std::move(std::get<IrredundantSystem>(min).kept);
  }

  ConstraintList out;
  for (const auto& c : cs) {
    RationalVector row(kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k) row[k] = c.coeffs[kept[k]];
    auto r = canonicalize(row, Rational(c.bound));
    if (std::holds_alternative<TriviallyFalse>(r)) return Polyhedron::empty(kept.size());
    if (auto* cc = std::get_if<CanonicalConstraint>(&r)) out.push_back(std::move(*cc));
  }
  std::sort(out.begin(), out.end());
  return Polyhedron(kept.size(), std::move(out));
}

}  // namespace pplp
