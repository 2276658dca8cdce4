#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace toricslope {

/// Exact rational scalar used by every combinatorial and geometric routine.
using Rational = boost::multiprecision::mpq_rational;

using Vector2q = Eigen::Matrix<Rational, 2, 1>;

/// Parses "3", "-7/4" or a finite decimal such as "0.125" into an exact rational.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// True when the reduced denominator is a power of two.
bool is_dyadic(const Rational& value);

}  // namespace toricslope
