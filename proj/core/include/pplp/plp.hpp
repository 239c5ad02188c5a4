#pragma once

// Parametric linear programming: maximize (C0 + sum_i mu_i Ci)^T X subject to
// A X = B, X >= 0, for every parameter vector mu.
//
// The solution is a list of regions of parameter space, each attached to an
// optimal basis and vertex. Regions are found by probing: solve at a
// parameter point, read off the region of the optimal basis from the signs of
// its reduced costs, then probe just outside each facet of that region.

#include "pplp/concurrent_store.hpp"
#include "pplp/constraint.hpp"
#include "pplp/lp.hpp"
#include "pplp/redundancy.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pplp {

struct ParametricObjective {
  /// terms[0] is the constant part, terms[i] multiplies mu_i. All have dim n.
  std::vector<RationalVector> terms;

  ParametricObjective() = default;
  explicit ParametricObjective(std::vector<RationalVector> terms);

  std::size_t parameters() const noexcept { return terms.empty() ? 0 : terms.size() - 1; }
  std::size_t dim() const noexcept { return terms.empty() ? 0 : terms.front().size(); }
  /// True when the constant part is zero, so regions are cones.
  bool homogeneous() const;
  RationalVector at(std::span<const Rational> mu) const;
  /// C(mu)^T x.
  Rational value(std::span<const Rational> mu, std::span<const Rational> x) const;
};

/// Objective rewritten over nonbasic variables: entry (i, j) is the coefficient
/// of mu_i * x_nonbasic(j), with mu_0 = 1 and column 0 the constant term.
struct ObjectiveTableau {
  std::vector<Index> nonbasic;
  RationalMatrix coeffs;  // (k+1) x (|nonbasic|+1)

  std::size_t parameters() const noexcept { return coeffs.rows() - 1; }
  /// Reduced cost of nonbasic column j (1-based, as in coeffs) at mu.
  Rational reduced_cost(std::size_t j, std::span<const Rational> mu) const;
  bool optimal_at(std::span<const Rational> mu) const;
};

/// Throws InvalidBasis on a singular basic block.
ObjectiveTableau exact_objective(const StandardLP& lp, const Basis& basis, const ParametricObjective& pobj);

struct EmptyCone {
  friend bool operator==(EmptyCone, EmptyCone) { return true; }
};

/// One constraint per nonbasic column: its affine form in mu must be <= 0.
/// Trivially true rows are dropped; a positive constant column gives EmptyCone.
std::variant<ConstraintList, EmptyCone> sign_conditions(const ObjectiveTableau& t);

struct Region {
  ConstraintList constraints;              // irredundant, over mu
  std::vector<RationalVector> witnesses;   // witnesses[i] violates constraints[i] only
  RationalVector optimum;                  // X*
  Basis basis;
  RationalVector interior_point;           // strictly inside
  std::optional<std::size_t> parent;       // region whose task discovered this one
  std::vector<FloatConstraint> float_constraints;

  Region() = default;
  Region(ConstraintList constraints, std::vector<RationalVector> witnesses, RationalVector optimum, Basis basis,
         RationalVector interior_point);

  /// Closed membership, with a floating-point filter before exact checks.
  bool covers(std::span<const Rational> mu) const;
  bool covers(std::span<const Rational> mu, std::span<const double> mu_float) const;
};

struct SolveStats {
  std::size_t tasks = 0;               // tasks executed, including retries
  std::size_t covered = 0;             // probes already covered on arrival
  std::size_t regions = 0;
  std::size_t aborted_duplicate = 0;   // aborts at the basis table
  std::size_t midpoint_repairs = 0;
  std::size_t flat_rejections = 0;     // bases whose region has empty interior
};

struct PLPSolution {
  std::vector<Region> regions;
  /// (parent, child); parent is nullopt for the region of the initial task.
  std::vector<std::pair<std::optional<std::size_t>, std::size_t>> generation_edges;
  SolveStats stats;
};

class PlpError : public std::runtime_error {
public:
  PlpError(LPStatus status, const std::string& what) : std::runtime_error(what), status_(status) {}
  LPStatus status() const noexcept { return status_; }

private:
  LPStatus status_;
};

struct PlpOptions {
  /// Starting parameter vector; empty means all ones.
  RationalVector initial_probe;
  RedundancyOptions redundancy;
  const FloatLpBackend* backend = nullptr;
  std::size_t store_capacity = std::size_t{1} << 20;
  /// Random re-probes tried when a probe lands on a basis whose region has
  /// empty interior.
  unsigned max_perturbations = 16;

  const FloatLpBackend& float_backend() const { return backend ? *backend : default_float_backend(); }
};

/// Scales a cone probe to a primitive integer vector; used when the objective
/// is homogeneous so that rays share one representative.
RationalVector normalize_probe(std::span<const Rational> probe);

/// Chebyshev-style interior point of {mu : constraints}: maximizes t with
/// a.mu + t*|a|_1 <= b and t <= 1. nullopt when the interior is empty.
std::optional<RationalVector> region_interior_point(std::size_t dim, std::span<const CanonicalConstraint> constraints,
                                                    const FloatLpBackend& backend = default_float_backend());

/// Builds the region of an optimal basis from its tableau: sign conditions,
/// interior point, redundancy elimination, witnesses pulled towards the
/// interior so that each one strictly satisfies the other constraints.
/// nullopt if the region has empty interior.
std::optional<Region> build_region(const ObjectiveTableau& tableau, RationalVector optimum, Basis basis,
                                   bool homogeneous, const PlpOptions& options);

/// The basis found at the probe is owned by someone else: either another task
/// is still building its region, or the region is published at `region`.
struct AlreadySeen {
  Basis basis;
  std::optional<std::size_t> region;
  bool in_progress() const noexcept { return !region; }
};
struct FlatRegion {
  friend bool operator==(FlatRegion, FlatRegion) { return true; }
};

/// Solves at C(probe) (float, certified, exact fallback), consults the basis
/// table and builds the region. The float basis is claimed before any exact
/// work; with trust_float = false the float solve is skipped.
///
/// On a new Region the caller owns its basis entry and must call
/// bases.publish() once the region is stored (or bases.fail()). FlatRegion
/// and EmptyCone leave the entry failed. Throws PlpError if the LP is
/// infeasible or unbounded at the probe.
using RegionResult = std::variant<Region, AlreadySeen, EmptyCone, FlatRegion>;
RegionResult compute_region(const StandardLP& lp, const ParametricObjective& pobj, std::span<const Rational> probe,
                            BasisTable& bases, const PlpOptions& options = {}, bool trust_float = true);

/// Exit point of the segment [from.interior_point, probe] through the boundary
/// of `from`; nullopt if the probe lies inside `from`.
std::optional<RationalVector> exit_point(const Region& from, std::span<const Rational> probe);

/// True iff the exit point of [interior(from), probe] lies in `to`. A missing
/// `from` (the initial task) is always adjacent.
bool are_adjacent(const Region* from, const Region& to, std::span<const Rational> probe);

/// (F + G) / 2 where F is the exit point from `from` and G the first point of
/// [F, probe] in `to` (the probe itself if the segment misses `to`).
RationalVector midpoint(const Region& from, const Region& to, std::span<const Rational> probe);

/// The stored witness for constraint i, or the interior point pushed just
/// across facet i when no witness is stored.
RationalVector compute_next(const Region& region, std::size_t i);

PLPSolution solve_sequential(const StandardLP& lp, const ParametricObjective& pobj, const PlpOptions& options = {});

}  // namespace pplp
