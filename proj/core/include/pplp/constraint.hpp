#pragma once

// Linear constraints in canonical integer form.

#include "pplp/rational.hpp"

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace pplp {

enum class Relation { less_equal, equal };

/// coeffs · x (<= | =) bound with integer data whose overall content
/// (gcd of coefficients and bound) is 1. Equalities have their first nonzero
/// coefficient positive; inequalities keep their orientation.
///
/// An all-zero coefficient vector only appears to represent the constant
/// false constraint 0 <= -1 (see Polyhedron::empty).
struct CanonicalConstraint {
  IntegerVector coeffs;
  Integer bound;
  Relation relation = Relation::less_equal;

  std::size_t dim() const noexcept { return coeffs.size(); }
  bool is_equality() const noexcept { return relation == Relation::equal; }
  bool is_zero() const;

  /// coeffs · x - bound, exactly.
  Rational excess(std::span<const Rational> x) const;
  /// Closed membership: excess <= 0 (or == 0 for equalities).
  bool satisfied_by(std::span<const Rational> x) const;
  bool strictly_satisfied_by(std::span<const Rational> x) const;

  RationalVector rational_coeffs() const;

  friend bool operator==(const CanonicalConstraint&, const CanonicalConstraint&) = default;
  friend std::strong_ordering operator<=>(const CanonicalConstraint& a, const CanonicalConstraint& b);
};

struct TriviallyTrue {
  friend bool operator==(TriviallyTrue, TriviallyTrue) { return true; }
};
struct TriviallyFalse {
  friend bool operator==(TriviallyFalse, TriviallyFalse) { return true; }
};

using Canonicalized = std::variant<CanonicalConstraint, TriviallyTrue, TriviallyFalse>;

/// Flushes denominators and removes the common factor of coefficients and
/// bound. All-zero coefficients resolve to TriviallyTrue / TriviallyFalse.
Canonicalized canonicalize(std::span<const Rational> coeffs, const Rational& bound,
                           Relation relation = Relation::less_equal);
Canonicalized canonicalize(const CanonicalConstraint& c);

/// Convenience: canonical form of a non-trivial constraint. Throws
/// std::invalid_argument when the constraint is trivially true or false.
CanonicalConstraint make_constraint(std::span<const Rational> coeffs, const Rational& bound,
                                    Relation relation = Relation::less_equal);
CanonicalConstraint make_constraint(std::initializer_list<long> coeffs, long bound,
                                    Relation relation = Relation::less_equal);

/// The constraint 0 <= -1 over dim variables.
CanonicalConstraint false_constraint(std::size_t dim);

/// coeffs divided by the gcd of the coefficients only, with the bound scaled
/// accordingly (rational). Two inequalities with equal directions compare by
/// bound; used for syntactic subsumption.
struct PrimitiveDirection {
  IntegerVector direction;
  Rational bound;
};
PrimitiveDirection primitive_direction(const CanonicalConstraint& c);

std::string format_constraint(const CanonicalConstraint& c);

/// x rounded to the coarsest dyadic grid 1/2^k on which `accept` holds, or x
/// itself if none up to 2^62 does. Keeps interior points and witnesses from
/// carrying huge denominators into later LPs.
RationalVector round_to_grid(std::span<const Rational> x,
                             const std::function<bool(std::span<const Rational>)>& accept);

/// round_to_grid keeping x strictly inside the inequalities of cs.
RationalVector simplify_interior(std::span<const CanonicalConstraint> cs, std::span<const Rational> x);

/// Double-precision copy of a constraint used as a fast filter before exact
/// evaluation.
struct FloatConstraint {
  std::vector<double> coeffs;
  double bound = 0.0;
  double magnitude = 0.0;  // sum of |coeffs| + |bound|
  explicit FloatConstraint(const CanonicalConstraint& c);
};

}  // namespace pplp
