#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pfaffkit/poly.hpp"
#include "pfaffkit/rational.hpp"

namespace pfaffkit {

using RationalPoly = Poly<Rational>;

enum class Irreducibility { Verified, Asserted };

/// A simple extension Q(theta) given by the monic minimal polynomial of theta.
///
/// Irreducibility is checked exactly up to degree 3 (no rational root);
/// above that the caller vouches for it and the status says so.
class NumberField {
 public:
  const RationalPoly& minpoly() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }
  Irreducibility status() const { return status_; }
  const std::string& generator() const { return generator_; }

  bool same_as(const NumberField& other) const { return minpoly_ == other.minpoly_; }

 private:
  friend std::shared_ptr<const NumberField> nf_new(const RationalPoly&, std::string);
  NumberField(RationalPoly minpoly, Irreducibility status, std::string generator)
      : minpoly_(std::move(minpoly)), status_(status), generator_(std::move(generator)) {}

  RationalPoly minpoly_;
  Irreducibility status_;
  std::string generator_;
};

/// Null handle means the rationals.
using FieldHandle = std::shared_ptr<const NumberField>;

FieldHandle nf_new(const RationalPoly& minpoly, std::string generator = "r");

bool same_field(const FieldHandle& a, const FieldHandle& b);
int field_degree(const FieldHandle& f);
std::string describe_field(const FieldHandle& f);

/// Rational roots of a nonzero rational polynomial, found by the rational
/// root test. Returns nullopt if the candidate search would be too large.
std::optional<std::vector<Rational>> rational_roots(const RationalPoly& p);

/// Exact element of Q or of a declared Q(theta), stored as coordinates in the
/// power basis 1, theta, ..., theta^(d-1), always reduced mod the minimal
/// polynomial.
///
/// Elements of Q (null field) mix freely with elements of any field; mixing
/// two different non-trivial fields raises FieldMismatch.
class AlgebraicScalar {
 public:
  AlgebraicScalar() : coords_{Rational(0)} {}
  AlgebraicScalar(long v) : coords_{Rational(v)} {}  // NOLINT(google-explicit-constructor)
  AlgebraicScalar(Rational v) : coords_{std::move(v)} {}  // NOLINT(google-explicit-constructor)
  AlgebraicScalar(FieldHandle field, std::vector<Rational> coords);

  /// theta itself.
  static AlgebraicScalar generator(const FieldHandle& field);

  const FieldHandle& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  Rational coord(std::size_t i) const { return i < coords_.size() ? coords_[i] : Rational(0); }

  bool is_zero() const;

  AlgebraicScalar operator-() const;
  friend AlgebraicScalar operator+(const AlgebraicScalar& a, const AlgebraicScalar& b);
  friend AlgebraicScalar operator-(const AlgebraicScalar& a, const AlgebraicScalar& b);
  friend AlgebraicScalar operator*(const AlgebraicScalar& a, const AlgebraicScalar& b);
  friend AlgebraicScalar operator/(const AlgebraicScalar& a, const AlgebraicScalar& b);
  AlgebraicScalar& operator+=(const AlgebraicScalar& b) { return *this = *this + b; }
  AlgebraicScalar& operator-=(const AlgebraicScalar& b) { return *this = *this - b; }
  AlgebraicScalar& operator*=(const AlgebraicScalar& b) { return *this = *this * b; }

  AlgebraicScalar inverse() const;
  AlgebraicScalar pow(long e) const;

  friend bool operator==(const AlgebraicScalar& a, const AlgebraicScalar& b);

 private:
  FieldHandle field_;
  std::vector<Rational> coords_;
};

enum class ScalarOp { Add, Sub, Mul, Div };

AlgebraicScalar scalar_arith(const AlgebraicScalar& a, const AlgebraicScalar& b, ScalarOp op);

/// The rational value of `a`, if it lies in Q.
std::optional<Rational> is_rational(const AlgebraicScalar& a);

/// q with a = q*b when a/b is rational.
std::optional<Rational> rational_multiple(const AlgebraicScalar& a, const AlgebraicScalar& b);

/// Field of the combination of a and b (promoting Q), or FieldMismatch.
FieldHandle common_field(const FieldHandle& a, const FieldHandle& b);

/// Exact square root inside the scalar's field, when one is found. Complete
/// for Q and for quadratic fields; returns nullopt in higher degree unless the
/// value is a rational square.
std::optional<AlgebraicScalar> field_sqrt(const AlgebraicScalar& a);

/// Parseable text, e.g. "3/2" or "(1 + 2*r)".
std::string to_string(const AlgebraicScalar& a);

}  // namespace pfaffkit
