#include "pplp/rational.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace pplp {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("RationalMatrix: entry count does not match shape");
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("RationalMatrix: ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalVector RationalMatrix::operator*(std::span<const Rational> x) const {
  assert(x.size() == cols_);
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row(r), x);
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  assert(a.size() == b.size());
  Rational sum;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) sum += a[i] * b[i];
  }
  return sum;
}

Integer common_denominator(std::span<const Rational> values) {
  Integer l = 1;
  for (const auto& v : values) {
    if (v.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

namespace {

// Scales a rational row to integers by its common denominator.
std::vector<Integer> integer_row(std::span<const Rational> row) {
  const Integer l = common_denominator(row);
  std::vector<Integer> out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    out[i] = row[i].get_num() * (l / row[i].get_den());
  }
  return out;
}

// Fraction-free (Bareiss) forward elimination on an augmented integer matrix
// whose first n columns form the square system. Rows are swapped in place;
// pivots are chosen by largest magnitude. Returns false if singular.
bool bareiss_forward(std::vector<std::vector<Integer>>& a, std::size_t n) {
  Integer prev = 1;
  const std::size_t width = a.empty() ? 0 : a.front().size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i) {
      if (sgn(a[i][k]) == 0) continue;
      if (pivot == n || mpz_cmpabs(a[i][k].get_mpz_t(), a[pivot][k].get_mpz_t()) > 0) pivot = i;
    }
    if (pivot == n) return false;
    if (pivot != k) std::swap(a[pivot], a[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        Integer v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return true;
}

}  // namespace

std::optional<RationalMatrix> solve_linear_systems(const RationalMatrix& m, const RationalMatrix& rhs) {
  if (m.rows() != m.cols() || rhs.rows() != m.rows()) {
    throw std::invalid_argument("solve_linear_systems: shape mismatch");
  }
  const std::size_t n = m.rows();
  const std::size_t r = rhs.cols();
  std::vector<std::vector<Integer>> a(n);
  RationalVector scratch(n + r);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(m.row(i).begin(), m.row(i).end(), scratch.begin());
    std::copy(rhs.row(i).begin(), rhs.row(i).end(), scratch.begin() + static_cast<std::ptrdiff_t>(n));
    a[i] = integer_row(scratch);
  }
  if (!bareiss_forward(a, n)) return std::nullopt;

  RationalMatrix x(n, r);
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t ii = n; ii-- > 0;) {
      Rational acc(a[ii][n + c]);
      for (std::size_t j = ii + 1; j < n; ++j) {
        if (sgn(a[ii][j]) != 0) acc -= Rational(a[ii][j]) * x(j, c);
      }
      acc /= Rational(a[ii][ii]);
      x(ii, c) = std::move(acc);
    }
  }
  return x;
}

std::optional<RationalVector> solve_linear_system(const RationalMatrix& m, std::span<const Rational> rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve_linear_system: shape mismatch");
  RationalMatrix b(rhs.size(), 1, RationalVector(rhs.begin(), rhs.end()));
  auto x = solve_linear_systems(m, b);
  if (!x) return std::nullopt;
  return x->column(0);
}

std::vector<std::size_t> independent_rows(const RationalMatrix& m) {
  // Row-echelon reduction of the transpose tracks which original rows are
  // pivots: a row is kept when it is not in the span of the kept rows before it.
  std::vector<std::size_t> kept;
  std::vector<std::vector<Integer>> basis;  // reduced kept rows
  std::vector<std::size_t> pivot_col;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Integer> v = integer_row(m.row(i));
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::size_t p = pivot_col[b];
      if (sgn(v[p]) == 0) continue;
      const Integer f = v[p];
      const Integer g = basis[b][p];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] * g - basis[b][j] * f;
      Integer content = 0;
      for (const auto& e : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), e.get_mpz_t());
      if (content > 1)
        for (auto& e : v) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), content.get_mpz_t());
    }
    auto nz = std::find_if(v.begin(), v.end(), [](const Integer& e) { return sgn(e) != 0; });
    if (nz == v.end()) continue;
    kept.push_back(i);
    pivot_col.push_back(static_cast<std::size_t>(nz - v.begin()));
    basis.push_back(std::move(v));
  }
  return kept;
}

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("invalid rational literal '" + std::string(text) + "'");
  };
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::string& out) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    out.assign(text.substr(start, pos - start));
    return pos > start;
  };
  std::string num, den = "1";
  if (!digits(num)) return fail();
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    if (!digits(den)) return fail();
  }
  if (pos != text.size()) return fail();
  Integer d(den);
  if (sgn(d) == 0) return fail();
  Rational q(Integer(num), d);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

std::string format_rational(const Rational& value) {
  // Values built as Rational(num, den) skip GMP's canonicalization.
  Rational q = value;
  q.canonicalize();
  return q.get_str();
}

std::string format_vector(std::span<const Rational> values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += format_rational(values[i]);
  }
  out += ")";
  return out;
}

Rational round_to(const Rational& x, const Integer& den) {
  Integer num = x.get_num() * den * 2 + x.get_den();
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), Integer(x.get_den() * 2).get_mpz_t());
  Rational r(q, den);
  r.canonicalize();
  return r;
}

}  // namespace pplp
