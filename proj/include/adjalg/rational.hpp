#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace adjalg {

// Exact arbitrary-precision scalars. mpq_rational keeps values in lowest
// terms with a positive denominator, which is exactly the contract the
// rest of the library relies on. No floating point exists anywhere.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& x);

// Accepts the same two forms to_string produces. Throws ParseError on
// anything else (including a zero denominator).
Rational parse_rational(const std::string& s);

// True when x is 0 or 1.
bool is_binary_value(const Rational& x);

// True when x has denominator 1.
bool is_integer_value(const Rational& x);

// Numerator of an integral rational, as an Integer. Precondition:
// denominator 1.
Integer to_integer(const Rational& x);

}  // namespace adjalg
