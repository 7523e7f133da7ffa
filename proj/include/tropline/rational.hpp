#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "tropline/errors.hpp"

namespace tropline {

using Int = boost::multiprecision::cpp_int;

// Exact rational, canonical form: gcd(|num|, den) = 1, den > 0, zero = 0/1.
// cpp_rational maintains exactly that canonical form.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  if (den < 0) return Rational(-num, -den);
  return Rational(num, den);
}

// Renders "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

// Accepts "p" and "p/q" with optional leading '-'. Throws ParseError on
// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace tropline
