#pragma once

// Constraint-only polyhedra and the "poly v1" text format.

#include "pplp/constraint.hpp"
#include "pplp/lp.hpp"
#include "pplp/redundancy.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace pplp {

struct Polyhedron {
  std::size_t dim = 0;
  ConstraintList constraints;

  Polyhedron() = default;
  Polyhedron(std::size_t d, ConstraintList cs);

  static Polyhedron universe(std::size_t d) { return Polyhedron(d, {}); }
  /// {0 <= -1}.
  static Polyhedron empty(std::size_t d);

  /// True if some constraint is the constant false one. Says nothing about
  /// emptiness in general; see interior_point.
  bool is_marked_empty() const;
  bool contains(std::span<const Rational> x) const;

  std::size_t equality_count() const;
};

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// poly v1: "d m", then m rows "a_1 .. a_d b" meaning a.x <= b; a row that
/// starts with "=" is an equality. '#' starts a comment.
Polyhedron parse_poly(std::istream& in);
Polyhedron parse_poly_string(const std::string& text);
Polyhedron read_poly_file(const std::string& path);
std::string format_poly(const Polyhedron& p);
void write_poly_file(const std::string& path, const Polyhedron& p);

struct NotFullDim {
  friend bool operator==(NotFullDim, NotFullDim) { return true; }
};

/// Chebyshev-style point: maximize t with a.x + t*|a|_1 <= b over the
/// inequalities (equalities are ignored by the slack, so any equality makes
/// the result NotFullDim).
std::variant<RationalVector, EmptyPolyhedron, NotFullDim> interior_point(
    const Polyhedron& p, const FloatLpBackend& backend = default_float_backend());

/// Affine hull split: explicit equalities plus inequalities that hold with
/// equality everywhere on p, and the inequalities that do not.
struct AffineSplit {
  ConstraintList equalities;
  ConstraintList inequalities;
};
std::variant<AffineSplit, EmptyPolyhedron> split_implicit_equalities(
    const Polyhedron& p, const FloatLpBackend& backend = default_float_backend());

/// Reduced row echelon form of a set of equalities, with pivots taken from
/// columns in `order` first-come. Rows come back with pivot coefficient 1.
struct EqualityEchelon {
  std::vector<RationalVector> rows;  // dim + 1 entries: coefficients then rhs
  std::vector<std::size_t> pivots;   // pivot column of each row
  bool inconsistent = false;
};
EqualityEchelon equality_echelon(std::span<const CanonicalConstraint> eqs, std::size_t dim,
                                 std::span<const std::size_t> order);

/// Rewrites c so that it has zero coefficients on the echelon pivots.
Canonicalized substitute_pivots(const CanonicalConstraint& c, const EqualityEchelon& ech);

/// Unique representation of the point set: implicit equalities made
/// explicit and brought to echelon form, inequalities reduced modulo them and
/// made irredundant, everything sorted. The empty set becomes {0 <= -1}.
Polyhedron canonical_form(const Polyhedron& p, const RedundancyOptions& options = {});

bool same_set(const Polyhedron& a, const Polyhedron& b);

}  // namespace pplp
