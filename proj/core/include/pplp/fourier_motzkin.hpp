#pragma once

// Textbook Fourier-Motzkin elimination. Only meant as a reference to check
// projections on small inputs.

#include "pplp/polyhedron.hpp"

#include <stdexcept>

namespace pplp {

class OracleCapExceeded : public std::runtime_error {
public:
  explicit OracleCapExceeded(std::size_t produced)
      : std::runtime_error("Fourier-Motzkin produced " + std::to_string(produced) + " constraints, over the cap"),
        produced_(produced) {}
  std::size_t produced() const noexcept { return produced_; }

private:
  std::size_t produced_;
};

struct FmOptions {
  /// Refuse once a single elimination step would create more constraints.
  std::size_t cap = 5000;
  RedundancyOptions redundancy;
};

/// Eliminates the variables one at a time in increasing index order, pruning
/// with eliminate_redundancy after each step. Equalities are split into two
/// inequalities. The result is over the kept variables.
Polyhedron fm_project(const Polyhedron& p, std::span<const std::size_t> eliminate, const FmOptions& options = {});

}  // namespace pplp
