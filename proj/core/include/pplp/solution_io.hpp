#pragma once

// Text and DOT output for parametric LP solutions.
//
//   plp v1 <parameters>
//   region <id> basis {i,j,...}
//   <a_1 .. a_k b>          one line per constraint a.mu <= b
//   optimum <x_1 .. x_n>
//   parent <id|none>

#include "pplp/plp.hpp"

#include <iosfwd>
#include <string>

namespace pplp {

std::string format_solution(const PLPSolution& sol, std::size_t parameters);
/// Restores regions (constraints, optimum, basis, parent) and the generation
/// edges. Witnesses and interior points are not stored. Throws ParseError.
PLPSolution parse_solution(std::istream& in);
PLPSolution parse_solution_string(const std::string& text);

/// One node per region, one edge per generation edge; roots drawn with a
/// double border.
std::string generation_dot(const PLPSolution& sol);

}  // namespace pplp
