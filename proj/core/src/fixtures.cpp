#include "pplp/fixtures.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace pplp {

PlpInstance example1() {
  StandardLP lp(RationalMatrix::from_rows({{3, -1, 1, 0}, {-1, 3, 0, 1}}), {6, 6});
  ParametricObjective pobj({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  return {std::move(lp), std::move(pobj)};
}

Polyhedron example1_polygon() {
  return Polyhedron(2, {make_constraint({-1, 0}, 0), make_constraint({0, -1}, 0), make_constraint({3, -1}, 6),
                        make_constraint({-1, 3}, 6)});
}

namespace {

using Vec3 = std::array<Rational, 3>;

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 minus(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Rational dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

}  // namespace

PlpInstance pyramid(std::size_t k) {
  if (k < 3) throw std::invalid_argument("pyramid needs at least 3 base vertices");
  // Rational points on the unit circle: ((1-t^2)/(1+t^2), 2t/(1+t^2)) with
  // t close to tan(theta/2).
  std::vector<Vec3> base;
  for (std::size_t i = 0; i < k; ++i) {
    const double theta = 2 * std::numbers::pi * (double(i) + 0.5) / double(k);
    Rational t(static_cast<long>(std::lround(std::tan(theta / 2) * 1000)), 1000);
    t.canonicalize();
    const Rational den = 1 + t * t;
    base.push_back({1 + (1 - t * t) / den, 1 + 2 * t / den, Rational(0)});
  }
  const Vec3 apex{1, 1, 1};
  const Vec3 center{1, 1, 0};

  const std::size_t n = 3 + k;
  RationalMatrix a(k, n);
  RationalVector b(k);
  for (std::size_t i = 0; i < k; ++i) {
    Vec3 normal = cross(minus(base[i], apex), minus(base[(i + 1) % k], apex));
    if (sgn(dot3(normal, minus(center, apex))) > 0)
      for (auto& v : normal) v = -v;
    const auto c = make_constraint(std::span<const Rational>(normal.data(), 3), dot3(normal, apex));
    for (std::size_t j = 0; j < 3; ++j) a(i, j) = c.coeffs[j];
    a(i, 3 + i) = 1;
    b[i] = c.bound;
  }
  std::vector<RationalVector> terms(4, RationalVector(n));
  for (std::size_t j = 0; j < 3; ++j) terms[j + 1][j] = 1;
  return {StandardLP(std::move(a), std::move(b)), ParametricObjective(std::move(terms))};
}

RationalVector pyramid_apex(std::size_t k) {
  RationalVector x(3 + k);
  x[0] = x[1] = x[2] = 1;
  return x;
}

}  // namespace pplp
