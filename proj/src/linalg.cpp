#include "chipfire/linalg.hpp"

#include <utility>

#include "chipfire/errors.hpp"

namespace chipfire {
namespace {

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

void swap_rows(RationalMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// In-place reduced row echelon form; returns the pivot column of each pivot row.
// Pivot choice is the first row (in order) with a non-zero entry.
std::vector<std::size_t> reduce_rows(RationalMatrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    swap_rows(m, row, p);
    const Rational pivot = m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) /= pivot;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

BigInt determinant(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  BigIntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);

  BigInt sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

RationalMatrix inverse(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  if (reduce_rows(aug, n).size() != n) throw SingularMatrix("matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

BigIntMatrix adjugate(const IntMatrix& m) {
  const RationalMatrix inv = inverse(m);
  const BigInt det = determinant(m);
  BigIntMatrix adj(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational scaled = inv(i, j) * det;
      if (denominator(scaled) != 1) throw InvariantViolation("adjugate entry is not an integer");
      adj(i, j) = numerator(scaled);
    }
  return adj;
}

RationalVector solve_left(std::span<const Rational> v, const IntMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("solve_left needs a square matrix");
  const std::size_t n = m.rows();
  if (v.size() != n) throw DimensionMismatch("solve_left: vector length does not match the matrix");

  // x·m = v  <=>  mᵀ·xᵀ = vᵀ
  RationalMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(j, i);
    aug(i, n) = v[i];
  }
  if (reduce_rows(aug, n).size() != n) throw SingularMatrix("matrix is singular");
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

RationalVector solve_left(std::span<const std::int64_t> v, const IntMatrix& m) {
  RationalVector q(v.begin(), v.end());
  return solve_left(std::span<const Rational>(q), m);
}

bool is_integral(std::span<const Rational> v) {
  for (const auto& q : v)
    if (denominator(q) != 1) return false;
  return true;
}

RankKernel rank_and_kernel(const IntMatrix& m) {
  RationalMatrix r = to_rational(m);
  const auto pivots = reduce_rows(r, m.cols());

  RankKernel result;
  result.rank = pivots.size();
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto c : pivots) is_pivot[c] = 1;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(m.cols());
    x[free] = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row) x[pivots[row]] = -r(row, free);
    result.kernel_basis.push_back(std::move(x));
  }
  return result;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in rational \"" + text + "\"");
    return Rational(BigInt(text.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    throw InputError("malformed rational \"" + text + "\"");
  }
}

}  // namespace chipfire
