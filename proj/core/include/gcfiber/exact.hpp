#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace gcfiber {

/// Exact rational used for triangle entries. Decimal input and doubles both
/// convert into it without rounding.
using Exact = boost::multiprecision::cpp_rational;

/// Parses "-12.5", "3", "1e-3", "+0.25". Throws Error(Parse) on anything else.
Exact parse_decimal(std::string_view text);

Exact from_double(double x);
double to_double(const Exact& x);

/// Finite decimal expansion when the denominator is 2^a 5^b and the expansion
/// is short; otherwise the shortest round-trip form of the nearest double.
std::string to_decimal_string(const Exact& x);

}  // namespace gcfiber
