#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_int/cpp_int_config.hpp>
#include <string>

namespace homind {

// Exact arbitrary-precision scalars. cpp_rational keeps values gcd-reduced
// with a positive denominator, which is exactly the canonical form we want;
// zero is 0/1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rational& r);

// Accepts "p", "-p" or "p/q" (whitespace-free). Throws std::invalid_argument
// on malformed input or a zero denominator.
Rational rat_parse(const std::string& s);

std::string int_str(const Integer& n);

}  // namespace homind
