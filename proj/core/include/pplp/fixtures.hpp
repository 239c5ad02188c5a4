#pragma once

// Small known instances shared by tests, benchmarks and the CLI.

#include "pplp/plp.hpp"
#include "pplp/polyhedron.hpp"

namespace pplp {

struct PlpInstance {
  StandardLP lp;
  ParametricObjective pobj;
};

/// 3x1 - x2 + x3 = 6, -x1 + 3x2 + x4 = 6, x >= 0, maximize mu1 x1 + mu2 x2.
PlpInstance example1();
/// The polygon of example1 in (x1, x2): x >= 0, 3x1 - x2 <= 6, -x1 + 3x2 <= 6.
Polyhedron example1_polygon();

/// Pyramid with apex (1,1,1) over a k-gon in the plane x3 = 0, with slack
/// variables for the k side facets (n = 3 + k, m = k) and objective
/// mu . (x1, x2, x3). Every 3 of the k slacks give a basis of the apex.
PlpInstance pyramid(std::size_t k);
RationalVector pyramid_apex(std::size_t k);

}  // namespace pplp
