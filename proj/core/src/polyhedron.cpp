#include "pplp/polyhedron.hpp"

#include "pplp/inequality_lp.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

namespace pplp {

Polyhedron::Polyhedron(std::size_t d, ConstraintList cs) : dim(d), constraints(std::move(cs)) {
  for (const auto& c : constraints)
    if (c.dim() != dim) throw std::invalid_argument("Polyhedron: constraint dimension mismatch");
}

Polyhedron Polyhedron::empty(std::size_t d) { return Polyhedron(d, {false_constraint(d)}); }

bool Polyhedron::is_marked_empty() const {
  return std::any_of(constraints.begin(), constraints.end(), [](const auto& c) { return c.is_zero(); });
}

bool Polyhedron::contains(std::span<const Rational> x) const {
  return std::all_of(constraints.begin(), constraints.end(), [&](const auto& c) { return c.satisfied_by(x); });
}

std::size_t Polyhedron::equality_count() const {
  return static_cast<std::size_t>(
      std::count_if(constraints.begin(), constraints.end(), [](const auto& c) { return c.is_equality(); }));
}

namespace {

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

std::size_t parse_count(const std::string& tok, std::size_t line, const char* what) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char ch) { return std::isdigit(ch); }))
    throw ParseError(line, std::string("expected a nonnegative integer for ") + what + ", got '" + tok + "'");
  return std::stoul(tok);
}

}  // namespace

Polyhedron parse_poly(std::istream& in) {
  std::size_t lineno = 0;
  std::size_t d = 0, m = 0;
  bool header = false;
  std::size_t rows = 0;
  ConstraintList cs;
  bool empty = false;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    auto toks = tokens_of(strip_comment(raw));
    if (toks.empty()) continue;
    if (!header) {
      if (toks.size() != 2) throw ParseError(lineno, "header must be 'd m'");
      d = parse_count(toks[0], lineno, "d");
      m = parse_count(toks[1], lineno, "m");
      header = true;
      continue;
    }
    if (rows == m) throw ParseError(lineno, "more than " + std::to_string(m) + " constraint rows");
    Relation rel = Relation::less_equal;
    if (toks[0] == "=") {
      rel = Relation::equal;
      toks.erase(toks.begin());
    } else if (toks[0].front() == '=') {
      rel = Relation::equal;
      toks[0].erase(0, 1);
    }
    if (toks.size() != d + 1)
      throw ParseError(lineno, "expected " + std::to_string(d + 1) + " values, got " + std::to_string(toks.size()));
    RationalVector coeffs(d);
    Rational bound;
    try {
      for (std::size_t j = 0; j < d; ++j) coeffs[j] = parse_rational(toks[j]);
      bound = parse_rational(toks[d]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
    ++rows;
    auto canon = canonicalize(coeffs, bound, rel);
    if (std::holds_alternative<TriviallyFalse>(canon))
      empty = true;
    else if (auto* c = std::get_if<CanonicalConstraint>(&canon))
      cs.push_back(std::move(*c));
  }
  if (!header) throw ParseError(lineno, "missing header");
  if (rows != m) throw ParseError(lineno, "expected " + std::to_string(m) + " rows, got " + std::to_string(rows));
  if (empty) return Polyhedron::empty(d);
  return Polyhedron(d, std::move(cs));
}

Polyhedron parse_poly_string(const std::string& text) {
  std::istringstream in(text);
  return parse_poly(in);
}

Polyhedron read_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_poly(in);
}

std::string format_poly(const Polyhedron& p) {
  std::ostringstream out;
  out << p.dim << ' ' << p.constraints.size() << '\n';
  for (const auto& c : p.constraints) {
    if (c.is_equality()) out << "= ";
    for (const auto& a : c.coeffs) out << a.get_str() << ' ';
    out << c.bound.get_str() << '\n';
  }
  return out.str();
}

void write_poly_file(const std::string& path, const Polyhedron& p) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << format_poly(p);
}

std::variant<RationalVector, EmptyPolyhedron, NotFullDim> interior_point(const Polyhedron& p,
                                                                         const FloatLpBackend& backend) {
  if (p.is_marked_empty()) return EmptyPolyhedron{};
  const std::size_t d = p.dim;
  InequalityProblem prob;
  prob.dim = d + 1;
  bool has_eq = false;
  for (const auto& c : p.constraints) {
    RationalVector row(d + 1);
    Integer norm = 0;
    for (std::size_t j = 0; j < d; ++j) {
      row[j] = c.coeffs[j];
      norm += abs(c.coeffs[j]);
    }
    if (c.is_equality()) {
      has_eq = true;
      prob.add_eq(std::move(row), Rational(c.bound));
    } else {
      row[d] = norm;
      prob.add_le(std::move(row), Rational(c.bound));
    }
  }
  RationalVector cap(d + 1);
  cap[d] = 1;
  prob.add_le(std::move(cap), Rational(1));
  prob.objective.assign(d + 1, Rational(0));
  prob.objective[d] = 1;
  const auto r = maximize(prob, backend);
  if (r.status == LPStatus::infeasible) return EmptyPolyhedron{};
  if (r.status != LPStatus::optimal) throw std::logic_error("interior_point: slack LP unbounded");
  // t is free: a negative optimum means no point satisfies all constraints.
  if (sgn(r.x[d]) < 0) return EmptyPolyhedron{};
  if (has_eq || sgn(r.x[d]) == 0) return NotFullDim{};
  return simplify_interior(p.constraints, std::span<const Rational>(r.x).first(d));
}

std::variant<AffineSplit, EmptyPolyhedron> split_implicit_equalities(const Polyhedron& p,
                                                                     const FloatLpBackend& backend) {
  auto syn = syntactic_minimize(p.constraints);
  if (std::holds_alternative<EmptyPolyhedron>(syn)) return EmptyPolyhedron{};
  const auto& cs = std::get<ConstraintList>(syn);
  const std::size_t d = p.dim;

  AffineSplit out;
  std::vector<std::size_t> ineq;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].is_equality())
      out.equalities.push_back(cs[i]);
    else
      ineq.push_back(i);
  }
  // Candidates for implicit equalities: inequalities not yet seen strict.
  std::vector<bool> candidate(ineq.size(), true);
  std::size_t remaining = ineq.size();
  bool checked_feasible = false;
  while (remaining > 0 || !checked_feasible) {
    checked_feasible = true;
    std::vector<std::size_t> slack_of(ineq.size(), 0);
    std::size_t nt = 0;
    for (std::size_t k = 0; k < ineq.size(); ++k)
      if (candidate[k]) slack_of[k] = d + nt++;
    InequalityProblem prob;
    prob.dim = d + nt;
    for (std::size_t k = 0; k < ineq.size(); ++k) {
      const auto& c = cs[ineq[k]];
      RationalVector row(d + nt);
      for (std::size_t j = 0; j < d; ++j) row[j] = c.coeffs[j];
      if (candidate[k]) row[slack_of[k]] = 1;
      prob.add_le(std::move(row), Rational(c.bound));
    }
    for (std::size_t t = 0; t < nt; ++t) {
      RationalVector up(d + nt), down(d + nt);
      up[d + t] = 1;
      down[d + t] = -1;
      prob.add_le(std::move(up), Rational(1));
      prob.add_le(std::move(down), Rational(0));
    }
    for (const auto& e : out.equalities) {
      RationalVector row(d + nt);
      for (std::size_t j = 0; j < d; ++j) row[j] = e.coeffs[j];
      prob.add_eq(std::move(row), Rational(e.bound));
    }
    prob.objective.assign(d + nt, Rational(0));
    for (std::size_t t = 0; t < nt; ++t) prob.objective[d + t] = 1;
    const auto r = maximize(prob, backend);
    if (r.status == LPStatus::infeasible) return EmptyPolyhedron{};
    if (r.status != LPStatus::optimal) throw std::logic_error("split_implicit_equalities: unbounded slack LP");
    if (nt == 0) break;
    bool progress = false;
    for (std::size_t k = 0; k < ineq.size(); ++k) {
      if (candidate[k] && sgn(r.x[slack_of[k]]) > 0) {
        candidate[k] = false;
        --remaining;
        progress = true;
      }
    }
    if (!progress) break;  // every remaining candidate is tight everywhere
  }
  for (std::size_t k = 0; k < ineq.size(); ++k) {
    const auto& c = cs[ineq[k]];
    if (candidate[k]) {
      auto eq = canonicalize(c.rational_coeffs(), Rational(c.bound), Relation::equal);
      out.equalities.push_back(std::get<CanonicalConstraint>(eq));
    } else {
      out.inequalities.push_back(c);
    }
  }
  return out;
}

EqualityEchelon equality_echelon(std::span<const CanonicalConstraint> eqs, std::size_t dim,
                                 std::span<const std::size_t> order) {
  EqualityEchelon ech;
  std::vector<RationalVector> rows;
  for (const auto& e : eqs) {
    RationalVector row(dim + 1);
    for (std::size_t j = 0; j < dim; ++j) row[j] = e.coeffs[j];
    row[dim] = e.bound;
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> cols(order.begin(), order.end());
  for (std::size_t j = 0; j < dim; ++j)
    if (std::find(cols.begin(), cols.end(), j) == cols.end()) cols.push_back(j);

  std::size_t r = 0;
  for (std::size_t col : cols) {
    if (r == rows.size()) break;
    std::size_t piv = r;
    while (piv < rows.size() && sgn(rows[piv][col]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const Rational inv = 1 / rows[r][col];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][col]) == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = 0; j <= dim; ++j)
        if (sgn(rows[r][j]) != 0) rows[i][j] -= f * rows[r][j];
    }
    ech.pivots.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i)
    if (sgn(rows[i][dim]) != 0) ech.inconsistent = true;
  rows.resize(r);
  ech.rows = std::move(rows);
  return ech;
}

Canonicalized substitute_pivots(const CanonicalConstraint& c, const EqualityEchelon& ech) {
  RationalVector a = c.rational_coeffs();
  Rational b = c.bound;
  const std::size_t dim = a.size();
  for (std::size_t i = 0; i < ech.rows.size(); ++i) {
    const std::size_t p = ech.pivots[i];
    if (sgn(a[p]) == 0) continue;
    const Rational f = a[p];
    for (std::size_t j = 0; j < dim; ++j)
      if (sgn(ech.rows[i][j]) != 0) a[j] -= f * ech.rows[i][j];
    b -= f * ech.rows[i][dim];
  }
  return canonicalize(a, b, c.relation);
}

Polyhedron canonical_form(const Polyhedron& p, const RedundancyOptions& options) {
  if (p.is_marked_empty()) return Polyhedron::empty(p.dim);
  const FloatLpBackend& backend = options.backend ? *options.backend : default_float_backend();
  auto split = split_implicit_equalities(p, backend);
  if (std::holds_alternative<EmptyPolyhedron>(split)) return Polyhedron::empty(p.dim);
  auto& s = std::get<AffineSplit>(split);
  std::vector<std::size_t> order(p.dim);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto ech = equality_echelon(s.equalities, p.dim, order);
  if (ech.inconsistent) return Polyhedron::empty(p.dim);

  ConstraintList eqs;
  for (const auto& row : ech.rows) {
    auto c = canonicalize(std::span<const Rational>(row.data(), p.dim), row[p.dim], Relation::equal);
    eqs.push_back(std::get<CanonicalConstraint>(c));
  }
  ConstraintList ineqs;
  for (const auto& c : s.inequalities) {
    auto r = substitute_pivots(c, ech);
    if (std::holds_alternative<TriviallyFalse>(r)) return Polyhedron::empty(p.dim);
    if (auto* cc = std::get_if<CanonicalConstraint>(&r)) ineqs.push_back(std::move(*cc));
  }
  auto min = minimize_constraints(ineqs, options);
  if (std::holds_alternative<EmptyPolyhedron>(min)) return Polyhedron::empty(p.dim);
  auto kept = std::move(std::get<IrredundantSystem>(min).kept);
  std::sort(eqs.begin(), eqs.end());
  std::sort(kept.begin(), kept.end());
  eqs.insert(eqs.end(), kept.begin(), kept.end());
  return Polyhedron(p.dim, std::move(eqs));
}

bool same_set(const Polyhedron& a, const Polyhedron& b) {
  if (a.dim != b.dim) return false;
  return canonical_form(a).constraints == canonical_form(b).constraints;
}

}  // namespace pplp
