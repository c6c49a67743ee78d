#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace bellbound {

namespace mp = boost::multiprecision;

/// Arbitrary-precision rational. Every probability, Bell value and LP
/// quantity in this library is exact; floating point never enters a
/// certification path. Locality at a critical efficiency is a
/// boundary-of-polytope question, so "close to feasible" is not a verdict.
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using BigInt = mp::number<mp::gmp_int, mp::et_off>;

/// Parses "p/q", a plain integer "p", or a decimal string such as "0.7"
/// (converted exactly, 0.7 -> 7/10). Leading '-' accepted.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" rendering in lowest terms; the denominator is always
/// written, so round-trips through files are bit-exact.
std::string format_rational(const Rational& value);

Rational rational_pow(const Rational& base, unsigned exponent);

/// Natural logarithm of a positive rational whose numerator or denominator
/// may be far outside double range (e.g. 256^200). Error is a few ulp plus
/// ~1e-13 absolute from the exponent term.
double log_rational(const Rational& value);

}  // namespace bellbound
