#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gqc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "n" or "n/d" in lowest terms.
std::string to_string(const Rational& r);
/// Accepts "n", "n/d", or a finite decimal such as "0.5".
Rational parse_rational(std::string_view s);
double to_double(const Rational& r);

}  // namespace gqc
