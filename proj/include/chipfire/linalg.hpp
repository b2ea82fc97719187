#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chipfire/matrix.hpp"

namespace chipfire {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RationalVector = std::vector<Rational>;
using RationalMatrix = Matrix<Rational>;
using BigIntMatrix = Matrix<BigInt>;

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

/// Exact inverse by Gauss-Jordan elimination over the rationals.
/// Throws SingularMatrix.
RationalMatrix inverse(const IntMatrix& m);

/// det(m)·m⁻¹, an integer matrix. Throws SingularMatrix.
BigIntMatrix adjugate(const IntMatrix& m);

/// Returns x with x·m = v. Throws SingularMatrix or DimensionMismatch.
RationalVector solve_left(std::span<const Rational> v, const IntMatrix& m);
RationalVector solve_left(std::span<const std::int64_t> v, const IntMatrix& m);

bool is_integral(std::span<const Rational> v);

struct RankKernel {
  std::size_t rank = 0;
  /// Basis of the right kernel {x : m·x = 0}, one vector per free column of
  /// the reduced row echelon form, with that free coordinate set to 1.
  std::vector<RationalVector> kernel_basis;
};

RankKernel rank_and_kernel(const IntMatrix& m);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses the format produced by `to_string`.
Rational parse_rational(const std::string& text);

}  // namespace chipfire
