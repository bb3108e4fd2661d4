#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace chpos {

// Expression templates off: `auto` on an arithmetic result then always holds a
// value, never a view into temporaries.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

/// Renders as "p" for integers and "p/q" otherwise.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed input or a zero
/// denominator.
Rational parse_rational(std::string_view text);

Rational inverse_factorial(int k);

int sign(const Rational& q);

}  // namespace chpos
