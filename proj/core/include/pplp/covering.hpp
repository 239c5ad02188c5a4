#pragma once

// Sampling check of a parametric LP solution: every sampled parameter must be
// covered by some region, the region's basis must be optimal there, and all
// regions covering the same parameter must agree on the objective value.

#include "pplp/plp.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pplp {

struct CoveringOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  /// Coordinates are drawn as center[j] + u * radius, u uniform in [-1, 1]
  /// with 1/1000 resolution. Empty center means the origin.
  RationalVector center;
  Rational radius = 10;
  /// Also certify the first covering basis at each sample.
  bool certify_bases = true;
  std::size_t max_reports = 5;
};

struct CoveringReport {
  std::size_t samples = 0;
  std::size_t covered = 0;
  std::size_t multiply_covered = 0;
  std::size_t disagreements = 0;
  std::size_t uncertified = 0;
  std::vector<std::string> counterexamples;

  bool passed() const { return covered == samples && disagreements == 0 && uncertified == 0; }
  double coverage() const { return samples ? double(covered) / double(samples) : 1.0; }
  double overlap_rate() const { return samples ? double(multiply_covered) / double(samples) : 0.0; }
};

CoveringReport verify_covering(const StandardLP& lp, const ParametricObjective& pobj,
                               std::span<const Region> regions, const CoveringOptions& options = {});

}  // namespace pplp
