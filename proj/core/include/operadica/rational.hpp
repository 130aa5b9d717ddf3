#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace operadica {

/// Exact arithmetic over the rationals. Values are always stored reduced
/// with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", with "/q" omitted when the denominator is 1.
std::string rational_to_string(const Rational& r);

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input
/// or zero denominator.
Rational rational_from_string(const std::string& s);

}  // namespace operadica
