#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace dyckx {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p" when the denominator is 1, otherwise "p/q" (canonical lowest terms).
std::string rational_to_string(const Rational& q);

// Accepts the forms produced by rational_to_string; throws std::invalid_argument otherwise.
Rational rational_from_string(const std::string& s);

}  // namespace dyckx
