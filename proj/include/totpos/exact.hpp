#pragma once

// Exact integer/rational scalars and the dense matrix aliases used across the
// library. Integer and Rational are GMP-backed boost::multiprecision numbers
// with expression templates disabled so they compose cleanly with Eigen.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace totpos {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Always held in lowest terms with a positive denominator; GMP canonicalizes
/// after every arithmetic operation and on construction from (num, den).
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using RowVectorX = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using IntegerMatrix = MatrixX<Integer>;
using RationalMatrix = MatrixX<Rational>;
using IntegerRowVector = RowVectorX<Integer>;

/// Binomial coefficient C(n, k) for n >= 0. Returns 0 for k < 0 or k > n.
/// Throws std::domain_error for n < 0.
Integer binomial(std::int64_t n, std::int64_t k);

/// Same as above with an arbitrary-precision top argument. Cost is O(min(k, n-k))
/// multiplications, so the bottom argument is expected to stay machine-sized.
Integer binomial(const Integer& n, std::int64_t k);

/// Number of east/north lattice paths from (0,0) to (m,n) that never visit a
/// point with y - x = t. Reflection principle: C(m+n, n) - C(m+n, n-t) when
/// the endpoint lies strictly below the line, otherwise 0.
/// Throws std::domain_error for t <= 0 or negative m, n.
Integer ballot_paths(std::int64_t m, std::int64_t n, std::int64_t t);

Rational make_rational(const Integer& numerator, const Integer& denominator);

/// Parses "p" or "p/q" (optional sign, decimal digits, surrounding blanks
/// allowed). The result is normalized. Throws std::invalid_argument on
/// malformed text and std::domain_error on a zero denominator.
Rational parse_rational(std::string_view text);

/// Parses a signed decimal integer. Throws std::invalid_argument.
Integer parse_integer(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

inline bool is_integral(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

}  // namespace totpos
