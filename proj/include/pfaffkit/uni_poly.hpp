#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfaffkit/number_field.hpp"

namespace pfaffkit {

/// Univariate polynomial over Q or a declared Q(theta).
using UniPoly = Poly<AlgebraicScalar>;

struct PolyToolkit {
  UniPoly gcd;
  UniPoly p_prime;
  bool coprime = false;
  /// q divides p exactly.
  bool divides = false;
  UniPoly quotient;
  UniPoly remainder;
};

/// The derivative of p together with gcd and division data for p and q.
PolyToolkit poly_toolkit(const UniPoly& p, const UniPoly& q);

struct LinearFactor {
  AlgebraicScalar root;
  int multiplicity = 1;
};

/// Splits p into linear factors over its coefficient field, if the roots can
/// be found: rational roots by the rational root test, then at most one
/// remaining quadratic via field_sqrt. Returns nullopt otherwise.
/// The leading coefficient is not part of the result.
std::optional<std::vector<LinearFactor>> split_linear(const UniPoly& p);

UniPoly from_rational(const RationalPoly& p);

/// Field hosting every coefficient of p (null for Q).
FieldHandle coefficient_field(const UniPoly& p);

/// Parseable text in variable `var`, e.g. "-1/2*x^3 + (1 + r)*x".
std::string to_string(const UniPoly& p, const std::string& var);

}  // namespace pfaffkit
