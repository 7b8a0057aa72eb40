#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace balance {

// Arbitrary-precision integers and rationals; all probabilities and balance
// constants are computed exactly, floating point is for display only.
using BigInt = boost::multiprecision::cpp_int;
using Ratio = boost::multiprecision::cpp_rational;

// Formats a rational as "p/q" with an explicit denominator, e.g. "1/2",
// "7/15", "0/1". The value is already in lowest terms (Ratio normalises).
std::string format_ratio(const Ratio& r);

// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
// malformed input or a zero denominator.
Ratio parse_ratio(const std::string& text);

}  // namespace balance
