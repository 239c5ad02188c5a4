#pragma once

// Exact rational scalars, vectors and matrices.
//
// Rational is GMP's mpq_class, which keeps every value in lowest terms with a
// positive denominator. Vectors are plain std::vector; matrices are dense and
// row-major.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pplp {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RationalMatrix identity(std::size_t n);
  /// Builds a matrix from nested initializer data, e.g. {{3, -1}, {-1, 3}}.
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  RationalVector column(std::size_t c) const;
  RationalMatrix transposed() const;
  RationalVector operator*(std::span<const Rational> x) const;

  const std::vector<Rational>& entries() const noexcept { return entries_; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Solves M x = rhs exactly. Returns nullopt when M is singular.
std::optional<RationalVector> solve_linear_system(const RationalMatrix& m,
                                                  std::span<const Rational> rhs);

/// Solves M X = R for every column of R with a single elimination pass.
std::optional<RationalMatrix> solve_linear_systems(const RationalMatrix& m,
                                                   const RationalMatrix& rhs);

/// Indices of a maximal linearly independent subset of the rows of m, in
/// increasing order.
std::vector<std::size_t> independent_rows(const RationalMatrix& m);

/// Least common multiple of the denominators of values (1 for an empty span).
Integer common_denominator(std::span<const Rational> values);

/// Parses "-3/8", "+5", "12". Throws std::invalid_argument on bad syntax or a
/// zero denominator.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& value);
std::string format_vector(std::span<const Rational> values);

/// x rounded to the nearest multiple of 1/den (halves round up).
Rational round_to(const Rational& x, const Integer& den);

}  // namespace pplp
