#pragma once

#include "pfaffkit/poly.hpp"

namespace pfaffkit {

/// Quotient num/den of univariate polynomials over a field `F`.
/// Canonical: den monic, gcd(num, den) = 1, zero is 0/1.
template <typename F>
class RatFunc {
 public:
  using P = Poly<F>;

  RatFunc() : den_(P::constant(F(1))) {}
  RatFunc(long v) : num_(P::constant(F(v))), den_(P::constant(F(1))) {}  // NOLINT
  RatFunc(const F& v) : num_(P::constant(v)), den_(P::constant(F(1))) {}  // NOLINT
  RatFunc(P num) : num_(std::move(num)), den_(P::constant(F(1))) {}  // NOLINT
  RatFunc(P num, P den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RatFunc variable() { return RatFunc(P::x()); }

  const P& num() const { return num_; }
  const P& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Constant value; only meaningful when is_constant().
  F constant_value() const { return num_.coeff(0) / den_.coeff(0); }

  RatFunc operator-() const { return raw(-num_, den_); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) {
      if (a.den_.is_constant()) return raw(a.num_ + b.num_, a.den_);
      return RatFunc(a.num_ + b.num_, a.den_);
    }
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.den_.is_constant() && b.den_.is_constant()) return raw(a.num_ * b.num_, a.den_);
    // Cross-cancel before multiplying keeps the product reduced.
    P g1 = a.num_.is_zero() ? P::constant(F(1)) : gcd(a.num_, b.den_);
    P g2 = b.num_.is_zero() ? P::constant(F(1)) : gcd(b.num_, a.den_);
    P n = a.num_.divmod(g1).first * b.num_.divmod(g2).first;
    P d = a.den_.divmod(g2).first * b.den_.divmod(g1).first;
    return RatFunc(std::move(n), std::move(d));
  }

  RatFunc inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero rational function");
    return RatFunc(den_, num_);
  }

  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

  RatFunc pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    return raw(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
  }

  /// d/dx by the quotient rule.
  RatFunc derivative() const {
    if (den_.is_constant()) return raw(num_.derivative(), den_);
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  // Skips normalization; callers guarantee the result is already canonical.
  static RatFunc raw(P num, P den) {
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = num_is_zero(r.num_) ? P::constant(F(1)) : std::move(den);
    return r;
  }
  static bool num_is_zero(const P& p) { return p.is_zero(); }

  void normalize() {
    if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = P::constant(F(1));
      return;
    }
    if (!den_.is_constant()) {
      P g = gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
      }
    }
    const F lead = den_.leading();
    if (!(lead == F(1))) {
      const F inv = F(1) / lead;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  P num_;
  P den_;
};

}  // namespace pfaffkit
