#ifndef FLATMORSE_RATIONAL_HPP
#define FLATMORSE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <string>

#include "error.hpp"

namespace flatmorse {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

// Parses "p/q" or a bare integer. Throws Error(Parse) on malformed input.
Rational parse_rational(const std::string& text);

// Greatest integer <= r, exact for negative values as well.
BigInt floor_rational(const Rational& r);

double to_double(const Rational& r);

// Renders "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

}  // namespace flatmorse

#endif
