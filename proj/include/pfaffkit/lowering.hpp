#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfaffkit/criteria.hpp"
#include "pfaffkit/expr.hpp"

namespace pfaffkit {

/// Q for an absent declaration, otherwise nf_new of the declared minpoly.
FieldHandle build_field(const std::optional<FieldDecl>& decl);

/// Polynomial with rational coefficients in the single symbol `var`.
RationalPoly lower_rational_poly(const Expr& e, const std::string& var);

/// The independent variable used by `exprs`: "t" or "z" when one of them
/// occurs as a free symbol not listed in `reserved`, nullopt otherwise.
/// InvalidInput if both occur.
std::optional<std::string> detect_tvar(const std::vector<const Expr*>& exprs, const FieldHandle& field,
                                       const std::vector<std::string>& reserved);

/// Symbols resolve to ring variables (name plus primes), the field
/// generator, or the base's independent variable; anything else raises
/// UnknownVariable.
DiffRatFunc lower(const Expr& e, const RingHandle& ring);

/// A t-free (or K(t)) coefficient with no ring variables.
KtElement lower_coefficient(const Expr& e, const BaseDiffField& base);

struct OrderOneOde {
  RingHandle ring;
  DiffRatFunc f;
  /// Read from a product/quotient of linear factors on the right-hand side.
  std::optional<FactoredRatFunc> factored;
};

/// y' = f(y).
OrderOneOde lower_order_one(const Equation& eq);

struct WeierstrassData {
  AlgebraicScalar g2;
  AlgebraicScalar g3;
};

/// y'^2 = 4 y^3 - g2 y - g3 over constants; nullopt if the left side is not y'^2.
std::optional<WeierstrassData> lower_weierstrass(const Equation& eq);

struct LinearOde {
  BaseDiffField base;
  std::string var;
  /// a_0..a_n with a_n = 1 after normalization.
  std::vector<KtElement> coeffs;
  bool normalized = false;
};

/// Homogeneous linear equation in y, y', ..., y^(n), as lhs - rhs = 0.
LinearOde lower_linear(const Equation& eq);

/// Candidate h(x) as a pair of polynomials over `field`.
PresentationCandidate lower_candidate(const Expr& e, const FieldHandle& field);

}  // namespace pfaffkit
