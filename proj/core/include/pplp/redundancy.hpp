#pragma once

// Redundancy elimination for constraint systems.
//
// syntactic_minimize removes trivial and subsumed constraints without solving
// anything. eliminate_redundancy then tests each remaining inequality with
// one LP, producing for every kept constraint a point that violates it while
// satisfying all other kept constraints.

#include "pplp/constraint.hpp"
#include "pplp/lp.hpp"

#include <atomic>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace pplp {

struct EmptyPolyhedron {
  friend bool operator==(EmptyPolyhedron, EmptyPolyhedron) { return true; }
};

using ConstraintList = std::vector<CanonicalConstraint>;

/// Drops trivially true rows and, among inequalities with the same primitive
/// direction, keeps the tightest bound. Equalities are deduplicated.
std::variant<ConstraintList, EmptyPolyhedron> syntactic_minimize(std::span<const CanonicalConstraint> cs);

enum class SatStatus { witness, unsat, empty };

struct SatResult {
  SatStatus status = SatStatus::unsat;
  RationalVector witness;  // set when status == witness
};

/// Looks for x satisfying every constraint of `weak` and strictly violating
/// `negated` by maximizing a slack t (capped at 1) with
/// negated.coeffs . x >= negated.bound + t. `empty` means `weak` itself is
/// infeasible.
SatResult check_sat(std::span<const CanonicalConstraint> weak, const CanonicalConstraint& negated,
                    const FloatLpBackend& backend = default_float_backend());

enum class RedundancyMode { sequential, parallel };

struct IrredundantSystem {
  ConstraintList kept;
  std::vector<RationalVector> witnesses;  // witnesses[i] violates kept[i] only
};

struct RedundancyOptions {
  RedundancyMode mode = RedundancyMode::sequential;
  unsigned threads = 0;  // parallel mode; 0 = hardware concurrency
  const FloatLpBackend* backend = nullptr;
};

/// Flags set to true never revert.
class RedundancyFlags {
public:
  explicit RedundancyFlags(std::size_t n) : flags_(std::make_unique<std::atomic<bool>[]>(n)), n_(n) {
    for (std::size_t i = 0; i < n; ++i) flags_[i].store(false, std::memory_order_relaxed);
  }
  bool test(std::size_t i) const { return flags_[i].load(std::memory_order_acquire); }
  void set(std::size_t i) { flags_[i].store(true, std::memory_order_release); }
  std::size_t size() const noexcept { return n_; }

private:
  std::unique_ptr<std::atomic<bool>[]> flags_;
  std::size_t n_;
};

/// Input must already be syntactically minimized. Equalities are always kept
/// and carry no witness requirement (their witness entry is empty).
std::variant<IrredundantSystem, EmptyPolyhedron> eliminate_redundancy(std::span<const CanonicalConstraint> cs,
                                                                      const RedundancyOptions& options = {});

/// Convenience: syntactic pass followed by eliminate_redundancy.
std::variant<IrredundantSystem, EmptyPolyhedron> minimize_constraints(std::span<const CanonicalConstraint> cs,
                                                                      const RedundancyOptions& options = {});

}  // namespace pplp
