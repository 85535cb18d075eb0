#include "pfaffkit/rational.hpp"

#include "pfaffkit/error.hpp"

namespace pfaffkit {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) fail(ErrorCode::InvalidInput, "not a rational: " + text);
  if (q.get_den() == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  Integer n = sqrt(q.get_num());
  Integer d = sqrt(q.get_den());
  return make_rational(n, d);
}

}  // namespace pfaffkit
