#include "pplp/constraint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pplp {

bool CanonicalConstraint::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Integer& c) { return sgn(c) == 0; });
}

Rational CanonicalConstraint::excess(std::span<const Rational> x) const {
  if (x.size() != coeffs.size()) throw std::invalid_argument("constraint/point dimension mismatch");
  Rational sum = -Rational(bound);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) != 0 && sgn(x[i]) != 0) sum += Rational(coeffs[i]) * x[i];
  }
  return sum;
}

bool CanonicalConstraint::satisfied_by(std::span<const Rational> x) const {
  const int s = sgn(excess(x));
  return is_equality() ? s == 0 : s <= 0;
}

bool CanonicalConstraint::strictly_satisfied_by(std::span<const Rational> x) const {
  return !is_equality() && sgn(excess(x)) < 0;
}

RationalVector CanonicalConstraint::rational_coeffs() const {
  return RationalVector(coeffs.begin(), coeffs.end());
}

std::strong_ordering operator<=>(const CanonicalConstraint& a, const CanonicalConstraint& b) {
  if (a.relation != b.relation) return a.relation <=> b.relation;
  if (a.coeffs.size() != b.coeffs.size()) return a.coeffs.size() <=> b.coeffs.size();
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    const int c = cmp(a.coeffs[i], b.coeffs[i]);
    if (c != 0) return c <=> 0;
  }
  return cmp(a.bound, b.bound) <=> 0;
}

Canonicalized canonicalize(std::span<const Rational> coeffs, const Rational& bound, Relation relation) {
  const bool all_zero = std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return sgn(c) == 0; });
  if (all_zero) {
    const int s = sgn(bound);
    const bool holds = relation == Relation::equal ? s == 0 : s >= 0;
    if (holds) return TriviallyTrue{};
    return TriviallyFalse{};
  }
  Integer l = common_denominator(coeffs);
  if (bound.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), bound.get_den_mpz_t());

  CanonicalConstraint c;
  c.relation = relation;
  c.coeffs.resize(coeffs.size());
  Integer content = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    c.coeffs[i] = coeffs[i].get_num() * (l / coeffs[i].get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.coeffs[i].get_mpz_t());
  }
  c.bound = bound.get_num() * (l / bound.get_den());
  mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.bound.get_mpz_t());
  if (content > 1) {
    for (auto& e : c.coeffs) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), content.get_mpz_t());
    mpz_divexact(c.bound.get_mpz_t(), c.bound.get_mpz_t(), content.get_mpz_t());
  }
  if (relation == Relation::equal) {
    auto first = std::find_if(c.coeffs.begin(), c.coeffs.end(), [](const Integer& e) { return sgn(e) != 0; });
    if (sgn(*first) < 0) {
      for (auto& e : c.coeffs) e = -e;
      c.bound = -c.bound;
    }
  }
  return c;
}

Canonicalized canonicalize(const CanonicalConstraint& c) {
  return canonicalize(c.rational_coeffs(), Rational(c.bound), c.relation);
}

CanonicalConstraint make_constraint(std::span<const Rational> coeffs, const Rational& bound, Relation relation) {
  auto r = canonicalize(coeffs, bound, relation);
  if (auto* c = std::get_if<CanonicalConstraint>(&r)) return std::move(*c);
  throw std::invalid_argument("make_constraint: constraint is trivial");
}

CanonicalConstraint make_constraint(std::initializer_list<long> coeffs, long bound, Relation relation) {
  RationalVector q;
  for (long c : coeffs) q.emplace_back(c);
  return make_constraint(q, Rational(bound), relation);
}

CanonicalConstraint false_constraint(std::size_t dim) {
  CanonicalConstraint c;
  c.coeffs.assign(dim, Integer(0));
  c.bound = -1;
  return c;
}

PrimitiveDirection primitive_direction(const CanonicalConstraint& c) {
  Integer g = 0;
  for (const auto& e : c.coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  PrimitiveDirection p;
  if (sgn(g) == 0) {
    p.direction = c.coeffs;
    p.bound = Rational(c.bound);
    return p;
  }
  p.direction.resize(c.coeffs.size());
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
    mpz_divexact(p.direction[i].get_mpz_t(), c.coeffs[i].get_mpz_t(), g.get_mpz_t());
  }
  p.bound = Rational(c.bound, g);
  p.bound.canonicalize();
  return p;
}

std::string format_constraint(const CanonicalConstraint& c) {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
    if (sgn(c.coeffs[i]) == 0) continue;
    Integer a = c.coeffs[i];
    if (first) {
      if (sgn(a) < 0) out += "-";
    } else {
      out += sgn(a) < 0 ? " - " : " + ";
    }
    a = abs(a);
    if (a != 1) out += a.get_str();
    out += "x" + std::to_string(i);
    first = false;
  }
  if (first) out += "0";
  out += c.is_equality() ? " = " : " <= ";
  out += c.bound.get_str();
  return out;
}

FloatConstraint::FloatConstraint(const CanonicalConstraint& c) : coeffs(c.coeffs.size()) {
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
    coeffs[i] = c.coeffs[i].get_d();
    magnitude += std::fabs(coeffs[i]);
  }
  bound = c.bound.get_d();
  magnitude += std::fabs(bound);
}

RationalVector round_to_grid(std::span<const Rational> x,
                             const std::function<bool(std::span<const Rational>)>& accept) {
  RationalVector y(x.size());
  Integer den = 1;
  for (int k = 0; k <= 62; ++k, den *= 2) {
    for (std::size_t j = 0; j < x.size(); ++j) y[j] = round_to(x[j], den);
    if (accept(y)) return y;
  }
  return RationalVector(x.begin(), x.end());
}

RationalVector simplify_interior(std::span<const CanonicalConstraint> cs, std::span<const Rational> x) {
  return round_to_grid(x, [&](std::span<const Rational> y) {
    return std::all_of(cs.begin(), cs.end(), [&](const CanonicalConstraint& c) {
      return c.is_equality() ? c.satisfied_by(y) : c.strictly_satisfied_by(y);
    });
  });
}

}  // namespace pplp
