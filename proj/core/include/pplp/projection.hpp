#pragma once

// Projection and convex hull through parametric linear programming.
//
// For a full-dimensional P = {x : A x <= b} with interior point x0, the
// multipliers lambda >= 0 with sum_i lambda_i A_i[j] = 0 on the eliminated
// coordinates and sum_i lambda_i (b_i - A_i x0) = 1 form a polytope. For
// parameters xk (the kept coordinates), minimizing
// sum_i lambda_i (b_i - A_i[K] xk) over it is a parametric LP; the optimal
// vertex of each region is a combination of rows that is a constraint of the
// projection.

#include "pplp/parallel.hpp"
#include "pplp/polyhedron.hpp"

#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace pplp {

struct ProjectionEncoding {
  StandardLP lambda_lp;             // over multipliers, one per row of `rows`
  ParametricObjective pobj;         // C0 = -b, C_j = A[:, kept[j]]
  std::vector<std::size_t> eliminated;
  std::vector<std::size_t> kept;
  RationalVector interior;          // x0, full coordinates
  ConstraintList rows;              // the inequalities of P
  std::size_t cancellation_rows = 0;  // independent ones kept in lambda_lp
};

/// p must consist of inequalities only and be full-dimensional and nonempty.
std::variant<ProjectionEncoding, EmptyPolyhedron, NotFullDim> build_projection_plp(
    const Polyhedron& p, std::span<const std::size_t> eliminate, const FloatLpBackend& backend = default_float_backend());

/// The constraint (sum lambda_i A_i) x <= sum lambda_i b_i over the kept
/// coordinates. Throws std::logic_error if the eliminated coefficients do not
/// cancel.
Canonicalized constraint_from_multipliers(const ProjectionEncoding& enc, std::span<const Rational> lambda);

struct ProjectOptions {
  unsigned threads = 1;
  Scheduler scheduler = Scheduler::dynamic_pool;
  PlpOptions plp;
  bool keep_solution = false;
};

struct ProjectionResult {
  Polyhedron polyhedron;              // over the kept coordinates, in order
  SolveStats stats;
  std::optional<PLPSolution> solution;
  std::optional<ProjectionEncoding> encoding;
};

/// Handles empty inputs (result empty), equalities and implicit equalities
/// (substituted away before building the parametric LP).
ProjectionResult project_detailed(const Polyhedron& p, std::span<const std::size_t> eliminate,
                                  const ProjectOptions& options = {});
Polyhedron project(const Polyhedron& p, std::span<const std::size_t> eliminate, const ProjectOptions& options = {});

/// Closed convex hull via the lifting x = y + z, A1 y <= s b1,
/// A2 z <= (1 - s) b2, 0 <= s <= 1, projected onto x.
ProjectionResult convex_hull_detailed(const Polyhedron& p1, const Polyhedron& p2, const ProjectOptions& options = {});
Polyhedron convex_hull(const Polyhedron& p1, const Polyhedron& p2, const ProjectOptions& options = {});

/// Complement of `eliminate` in 0..dim-1; throws on out-of-range indices.
std::vector<std::size_t> kept_variables(std::size_t dim, std::span<const std::size_t> eliminate);

}  // namespace pplp
