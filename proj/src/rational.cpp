#include "bellbound/rational.hpp"

#include <gmp.h>

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace bellbound {

namespace {

BigInt parse_integer(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer in rational literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("sign without digits in rational literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("invalid digit in rational literal: '" + text + "'");
    }
  }
  return BigInt(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const std::size_t slash = text.find('/');
  if (slash != std::string::npos) {
    const BigInt num = parse_integer(text.substr(0, slash));
    const BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num) / Rational(den);
  }
  const std::size_t dot = text.find('.');
  if (dot == std::string::npos) {
    return Rational(parse_integer(text));
  }
  // Decimal literal: scale the fractional part by a power of ten, exactly.
  const std::string head = text.substr(0, dot);
  const std::string tail = text.substr(dot + 1);
  const bool negative = !head.empty() && head[0] == '-';
  BigInt whole = (head.empty() || head == "-" || head == "+") ? BigInt(0) : parse_integer(head);
  if (negative) whole = -whole;
  BigInt scale(1);
  BigInt frac(0);
  if (!tail.empty()) {
    frac = parse_integer(tail);
    if (frac < 0) throw std::invalid_argument("invalid decimal literal '" + text + "'");
    for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
  }
  Rational value = Rational(whole) + Rational(frac) / Rational(scale);
  return negative ? -value : value;
}

std::string format_rational(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational factor = base;
  for (unsigned e = exponent; e != 0; e >>= 1) {
    if (e & 1u) result *= factor;
    if (e > 1) factor *= factor;
  }
  return result;
}

double log_rational(const Rational& value) {
  if (value <= 0) throw std::domain_error("log_rational requires a positive value");
  long num_exp = 0;
  long den_exp = 0;
  const double num_mant = mpz_get_d_2exp(&num_exp, mpq_numref(value.backend().data()));
  const double den_mant = mpz_get_d_2exp(&den_exp, mpq_denref(value.backend().data()));
  constexpr double kLn2 = 0.6931471805599453;
  return std::log(num_mant) - std::log(den_mant) +
         static_cast<double>(num_exp - den_exp) * kLn2;
}

}  // namespace bellbound
