#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace permpoly {

/// Exact rational backed by GMP; always canonical (lowest terms, positive
/// denominator) after arithmetic.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& r);

/// Accepts "p" or "p/q" with an optional leading '-'; reduces to lowest
/// terms. Throws ParseError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace permpoly
