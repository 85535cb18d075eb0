#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace pfaffkit {

/// Exact rational number, always kept in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Exact square root when `q` is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace pfaffkit
