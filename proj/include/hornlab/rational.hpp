#pragma once

// Exact rational scalars. Everything in the exact core (quantile arithmetic,
// Horn margins, approximation pipeline) runs on these; floating point is
// confined to the random-matrix oracle.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hornlab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact floor of a rational (rounds toward minus infinity).
Integer floor_int(const Rational& x);

/// Parses "p" or "p/q" with decimal p, q and optional leading '-'.
/// Throws PreconditionError on malformed input or zero denominator.
Rational parse_rational(const std::string& s);

/// Formats in lowest terms as "p/q", omitting "/q" when the denominator is 1.
std::string format_rational(const Rational& x);

/// True if x is an integer multiple of 1/n.
bool is_multiple_of_unit_fraction(const Rational& x, int n);

} // namespace hornlab
