#include "pplp/covering.hpp"

#include <random>

namespace pplp {

CoveringReport verify_covering(const StandardLP& lp, const ParametricObjective& pobj, std::span<const Region> regions,
                               const CoveringOptions& options) {
  const std::size_t k = pobj.parameters();
  RationalVector center = options.center.empty() ? RationalVector(k) : options.center;
  if (center.size() != k) throw std::invalid_argument("verify_covering: center has the wrong dimension");
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<long> dist(-1000, 1000);

  CoveringReport rep;
  RationalVector mu(k);
  for (std::size_t s = 0; s < options.samples; ++s) {
    for (std::size_t j = 0; j < k; ++j) {
      Rational u(dist(rng), 1000);
      u.canonicalize();
      mu[j] = center[j] + options.radius * u;
    }
    ++rep.samples;
    std::vector<std::size_t> hits;
    for (std::size_t r = 0; r < regions.size(); ++r)
      if (regions[r].covers(mu)) hits.push_back(r);
    if (hits.empty()) {
      if (rep.counterexamples.size() < options.max_reports)
        rep.counterexamples.push_back("uncovered parameter " + format_vector(mu));
      continue;
    }
    ++rep.covered;
    const RationalVector c = pobj.at(mu);
    const Rational value = dot(c, regions[hits[0]].optimum);
    if (hits.size() > 1) ++rep.multiply_covered;
    for (std::size_t h = 1; h < hits.size(); ++h) {
      const Rational other = dot(c, regions[hits[h]].optimum);
      if (other != value) {
        ++rep.disagreements;
        if (rep.counterexamples.size() < options.max_reports)
          rep.counterexamples.push_back("regions " + std::to_string(hits[0]) + " and " + std::to_string(hits[h]) +
                                        " disagree at " + format_vector(mu) + ": " + format_rational(value) +
                                        " vs " + format_rational(other));
      }
    }
    if (options.certify_bases) {
      const auto cert = certify(lp, regions[hits[0]].basis, c);
      if (!cert.certified || cert.x != regions[hits[0]].optimum) {
        ++rep.uncertified;
        if (rep.counterexamples.size() < options.max_reports)
          rep.counterexamples.push_back("basis of region " + std::to_string(hits[0]) + " not optimal at " +
                                        format_vector(mu));
      }
    }
  }
  return rep;
}

}  // namespace pplp
