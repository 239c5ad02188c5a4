#include "pplp/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace pplp {

void InstanceSpec::validate() const {
  if (constraints == 0) throw std::invalid_argument("need at least one constraint");
  if (redundant >= constraints) throw std::invalid_argument("redundant must be < constraints");
  if (redundant > 0 && constraints - redundant < 2) throw std::invalid_argument("redundant rows need two base rows");
  if (variables == 0) throw std::invalid_argument("need at least one variable");
  if (density == 0 || density > variables) throw std::invalid_argument("density must be in 1..variables");
  if (projected >= variables) throw std::invalid_argument("projected must be < variables");
}

std::string InstanceSpec::name() const {
  return std::to_string(constraints) + "_" + std::to_string(redundant) + "_" + std::to_string(count) + "_" +
         std::to_string(variables) + "_" + std::to_string(projected);
}

std::string InstanceSpec::file_name(std::size_t index) const {
  return name() + "_" + std::to_string(index) + ".poly";
}

std::vector<Polyhedron> generate(const InstanceSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int> coeff(-50, 49);  // shifted past 0 below
  std::uniform_int_distribution<int> bound(1, 100);
  std::uniform_int_distribution<int> weight(1, 10);
  const std::size_t base = spec.constraints - spec.redundant;

  std::vector<Polyhedron> out;
  for (std::size_t inst = 0; inst < spec.count; ++inst) {
    ConstraintList cs;
    std::vector<std::size_t> cols(spec.variables);
    while (cs.size() < base) {
      std::iota(cols.begin(), cols.end(), std::size_t{0});
      std::shuffle(cols.begin(), cols.end(), rng);
      RationalVector row(spec.variables);
      for (std::size_t k = 0; k < spec.density; ++k) {
        int v = coeff(rng);
        if (v >= 0) ++v;
        row[cols[k]] = v;
      }
      cs.push_back(make_constraint(row, Rational(bound(rng))));
    }
    std::uniform_int_distribution<std::size_t> pick(0, base - 1);
    while (cs.size() < spec.constraints) {
      const std::size_t u = pick(rng);
      std::size_t v = pick(rng);
      if (u == v) continue;
      Rational a(weight(rng), weight(rng)), b(weight(rng), weight(rng));
      a.canonicalize();
      b.canonicalize();
      RationalVector row(spec.variables);
      for (std::size_t j = 0; j < spec.variables; ++j) row[j] = a * cs[u].coeffs[j] + b * cs[v].coeffs[j];
      auto c = canonicalize(row, a * cs[u].bound + b * cs[v].bound + 1);
      if (auto* cc = std::get_if<CanonicalConstraint>(&c)) cs.push_back(std::move(*cc));
    }
    out.emplace_back(spec.variables, std::move(cs));
  }
  return out;
}

}  // namespace pplp
