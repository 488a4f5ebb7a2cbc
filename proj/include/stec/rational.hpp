#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace stec {

// Exact scalar ring for the algebra and polynomial layers. All identity
// suites run over this type with zero tolerance; floating point enters only
// through quadrature and finite differences.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Wire format "p/q", with "/q" omitted when the denominator is one.
std::string to_fraction_string(const Rational& r);

// Inverse of to_fraction_string. Accepts an optional leading '-'.
// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_fraction(std::string_view text);

double to_double(const Rational& r);

}  // namespace stec
