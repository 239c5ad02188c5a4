#pragma once

// Random benchmark polyhedra. Base rows have `density` nonzero integer
// coefficients in [-50, 50] and a bound in [1, 100], so the origin is
// strictly inside. Redundant rows are positive combinations of two base rows
// with the bound loosened by 1; they are always the last `redundant` rows.

#include "pplp/polyhedron.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pplp {

struct InstanceSpec {
  std::size_t constraints = 9;
  std::size_t redundant = 0;
  std::size_t variables = 16;
  std::size_t density = 16;
  std::size_t projected = 2;
  std::size_t count = 1;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument when the counts are inconsistent.
  void validate() const;
  /// constraints_redundant_count_variables_projected
  std::string name() const;
  std::string file_name(std::size_t index) const;
};

std::vector<Polyhedron> generate(const InstanceSpec& spec);

}  // namespace pplp
