#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace isosquare {

/// Arbitrary-precision integer used for every value that can outgrow a
/// machine word. Operations taking a Natural reject negative values.
using Natural = boost::multiprecision::cpp_int;

/// Exact ratio of two arbitrary-precision integers, always normalized.
using Rational = boost::multiprecision::cpp_rational;

/// 2^exponent.
Natural pow2(std::uint64_t exponent);

/// Parses a non-negative decimal integer. Throws InvalidArgument on anything
/// else (signs, whitespace, empty input).
Natural parse_natural(std::string_view text);

/// Decimal rendering, never in scientific notation.
std::string to_decimal(const Natural& n);

/// log2(n) as a double; n must be positive. Accurate to double precision for
/// values of any size.
double log2_natural(const Natural& n);

/// Throws InvalidArgument if n < 0. `what` names the offending parameter.
void require_non_negative(const Natural& n, const char* what);

}  // namespace isosquare
