#pragma once

#include <optional>
#include <string>

#include "pfaffkit/ratfunc.hpp"
#include "pfaffkit/uni_poly.hpp"

namespace pfaffkit {

/// Element of K(t): a reduced ratio of polynomials in t over K.
using KtElement = RatFunc<AlgebraicScalar>;

/// The base differential field: constants K with zero derivation, or K(t)
/// with d/dt. Elements are always KtElement; over constants they are t-free.
class BaseDiffField {
 public:
  BaseDiffField() = default;
  explicit BaseDiffField(FieldHandle constants) : field_(std::move(constants)) {}
  BaseDiffField(FieldHandle constants, std::string tvar)
      : field_(std::move(constants)), tvar_(std::move(tvar)) {}

  static BaseDiffField constants(FieldHandle k) { return BaseDiffField(std::move(k)); }
  static BaseDiffField rational_functions(FieldHandle k, std::string tvar = "t") {
    return BaseDiffField(std::move(k), std::move(tvar));
  }

  bool is_constant() const { return !tvar_.has_value(); }
  const FieldHandle& field() const { return field_; }
  const std::optional<std::string>& tvar() const { return tvar_; }

  /// delta(c): zero on constants, d/dt on K(t).
  KtElement derive(const KtElement& c) const;

  /// The independent variable t; InvalidInput over a constant base.
  KtElement t() const;

  /// Rejects elements mentioning t over a constant base.
  void check_member(const KtElement& c) const;

  friend bool operator==(const BaseDiffField& a, const BaseDiffField& b) {
    return same_field(a.field_, b.field_) && a.tvar_ == b.tvar_;
  }

 private:
  FieldHandle field_;
  std::optional<std::string> tvar_;
};

/// Monic gcd of polynomials with K(t) coefficients, via a subresultant
/// remainder sequence over K[t].
Poly<KtElement> gcd_over_kt(const Poly<KtElement>& a, const Poly<KtElement>& b);

/// Parseable text of a K(t) element in variable `tvar`.
std::string to_string(const KtElement& c, const std::string& tvar);

/// True when printing needs no surrounding parentheses in a product.
bool is_atomic_text(const KtElement& c);

}  // namespace pfaffkit
