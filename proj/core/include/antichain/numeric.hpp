#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace antichain {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" with q > 0; the denominator is always written, even when it is 1.
std::string to_fraction_string(const Rational &value);

/// Accepts "p/q" or a bare integer "p".
Rational parse_fraction(const std::string &text);

} // namespace antichain
