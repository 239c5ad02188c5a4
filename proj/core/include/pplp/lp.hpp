#pragma once

// Linear programs in standard form: maximize c^T X subject to A X = B, X >= 0.
//
// Solving goes through an untrusted floating-point backend that only has to
// produce a basis; the basis is then checked in exact arithmetic and, if the
// check fails, an exact simplex takes over.

#include "pplp/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pplp {

class StandardLP {
public:
  StandardLP() = default;
  /// Rows of a must be linearly independent and rows <= cols.
  StandardLP(RationalMatrix a, RationalVector b);

  /// Drops linearly dependent rows. Returns nullopt if the dropped rows are
  /// inconsistent with the kept ones (the system has no solution at all).
  static std::optional<StandardLP> with_independent_rows(const RationalMatrix& a, const RationalVector& b);

  std::size_t rows() const noexcept { return a_.rows(); }
  std::size_t cols() const noexcept { return a_.cols(); }
  const RationalMatrix& a() const noexcept { return a_; }
  const RationalVector& b() const noexcept { return b_; }

  // Double copies for float backends.
  std::span<const double> a_float() const noexcept { return a_float_; }
  std::span<const double> b_float() const noexcept { return b_float_; }

private:
  RationalMatrix a_;
  RationalVector b_;
  std::vector<double> a_float_;
  std::vector<double> b_float_;
};

using Index = std::uint32_t;

/// Partition of the variables; identified by the sorted nonbasic indices.
struct Basis {
  std::vector<Index> basic;     // sorted
  std::vector<Index> nonbasic;  // sorted

  static Basis from_basic(std::vector<Index> basic, std::size_t n);
  static Basis from_nonbasic(std::vector<Index> nonbasic, std::size_t n);

  bool well_formed(std::size_t m, std::size_t n) const;
  friend bool operator==(const Basis& a, const Basis& b) { return a.nonbasic == b.nonbasic; }
};

std::string format_basis(const Basis& b);

enum class LPStatus { optimal, infeasible, unbounded };

struct LPOutcome {
  LPStatus status = LPStatus::infeasible;
  Basis basis;       // valid when optimal
  RationalVector x;  // valid when optimal
};

enum class FloatStatus { optimal, infeasible, unbounded, failed };

struct FloatBackendResult {
  FloatStatus status = FloatStatus::failed;
  Basis basis;
};

/// Untrusted LP solver. Implementations must be callable concurrently.
class FloatLpBackend {
public:
  virtual ~FloatLpBackend() = default;
  virtual FloatBackendResult solve(const StandardLP& lp, std::span<const Rational> c) const = 0;
};

/// Dense double-precision two-phase simplex (Dantzig pricing, Bland's rule
/// after a run of degenerate pivots). Reentrant.
class DenseSimplexBackend final : public FloatLpBackend {
public:
  FloatBackendResult solve(const StandardLP& lp, std::span<const Rational> c) const override;
  FloatBackendResult solve(const StandardLP& lp, std::span<const double> c) const;
};

const FloatLpBackend& default_float_backend();

/// Raised when a basis does not have a nonsingular basic block.
class InvalidBasis : public std::runtime_error {
public:
  InvalidBasis() : std::runtime_error("basic columns are singular") {}
};

FloatBackendResult float_lp(const StandardLP& lp, std::span<const Rational> c,
                            const FloatLpBackend& backend = default_float_backend());

/// Solves A_B X = R, or A_B^T Y = R when `transposed`, where A_B is the basic
/// block. Basic columns with a single nonzero (slacks, mostly) are handled by
/// substitution so only the rest of the block is eliminated. nullopt when A_B
/// is singular.
std::optional<RationalMatrix> solve_basic(const StandardLP& lp, const Basis& basis, const RationalMatrix& rhs,
                                          bool transposed = false);

/// Vertex for the basis: nonbasic coordinates 0, basic ones solve
/// A_B x_B = B. nullopt when A_B is singular.
std::optional<RationalVector> exact_point(const StandardLP& lp, const Basis& basis);

/// Reduced costs alpha_j (one per nonbasic index, in basis.nonbasic order) with
/// c^T X = c^T X* + sum alpha_j X_j on the affine hull of AX = B.
/// Throws InvalidBasis.
RationalVector reduced_costs(const StandardLP& lp, const Basis& basis, std::span<const Rational> c);

struct Certificate {
  bool certified = false;
  RationalVector x;  // the optimum when certified
};

/// Certified iff the basis is nonsingular, its vertex is >= 0 and every
/// reduced cost is <= 0.
Certificate certify(const StandardLP& lp, const Basis& basis, std::span<const Rational> c);

/// Exact two-phase simplex with Bland's rule. A start basis that is
/// nonsingular and primal feasible skips phase 1.
LPOutcome exact_lp(const StandardLP& lp, std::span<const Rational> c, const Basis* start = nullptr);

/// float_lp, certification, exact fallback.
LPOutcome solve_lp(const StandardLP& lp, std::span<const Rational> c,
                   const FloatLpBackend& backend = default_float_backend());

}  // namespace pplp
