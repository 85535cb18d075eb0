#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pfaffkit/error.hpp"

namespace pfaffkit {

/// Dense univariate polynomial over a field `F`, lowest degree first.
///
/// `F` must be default-constructible to zero, constructible from `long`,
/// and provide the field operations and `==`. The zero polynomial has an
/// empty coefficient vector and degree -1; otherwise the leading
/// coefficient is nonzero.
template <typename F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const F& value) { return Poly(std::vector<F>{value}); }

  static Poly monomial(const F& value, std::size_t degree) {
    std::vector<F> c(degree + 1);
    c[degree] = value;
    return Poly(std::move(c));
  }

  static Poly x() { return monomial(F(1), 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_constant() const { return c_.size() <= 1; }

  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(); }
  const F& leading() const { return c_.back(); }
  const std::vector<F>& coefficients() const { return c_; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<F> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == F()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }

  Poly scaled(const F& s) const {
    std::vector<F> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return Poly(std::move(r));
  }

  Poly pow(unsigned e) const {
    Poly result = constant(F(1));
    Poly base = *this;
    while (e) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return result;
  }

  /// Horner evaluation.
  F operator()(const F& x) const {
    F acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<F> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * F(static_cast<long>(i));
    return Poly(std::move(r));
  }

  /// Euclidean division: returns (q, r) with *this = q*d + r and deg r < deg d.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) fail(ErrorCode::DivisionByZeroPolynomial, "polynomial division by zero");
    if (degree() < d.degree()) return {Poly(), *this};
    std::vector<F> rem = c_;
    std::vector<F> quo(c_.size() - d.c_.size() + 1);
    const F inv_lead = F(1) / d.leading();
    for (std::size_t k = quo.size(); k-- > 0;) {
      const F q = rem[k + d.c_.size() - 1] * inv_lead;
      quo[k] = q;
      if (q == F()) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] = rem[k + j] - q * d.c_[j];
    }
    rem.resize(d.c_.size() - 1);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(F(1) / leading());
  }

  /// Composition p(q).
  Poly compose(const Poly& q) const {
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + constant(c_[i]);
    return acc;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == F()) c_.pop_back();
  }

  std::vector<F> c_;
};

/// Monic greatest common divisor by the Euclidean algorithm.
template <typename F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  if (a.is_zero() && b.is_zero())
    fail(ErrorCode::DivisionByZeroPolynomial, "gcd of two zero polynomials");
  while (!b.is_zero()) {
    Poly<F> r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <typename F>
struct ExtendedGcd {
  Poly<F> gcd;  // monic
  Poly<F> s;
  Poly<F> t;    // s*a + t*b == gcd
};

template <typename F>
ExtendedGcd<F> extended_gcd(const Poly<F>& a, const Poly<F>& b) {
  if (a.is_zero() && b.is_zero())
    fail(ErrorCode::DivisionByZeroPolynomial, "gcd of two zero polynomials");
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::constant(F(1)), s1;
  Poly<F> t0, t1 = Poly<F>::constant(F(1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly<F> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const F inv = F(1) / r0.leading();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// True when `d` divides `p` exactly; the quotient is written to `quotient`.
template <typename F>
bool divides(const Poly<F>& d, const Poly<F>& p, Poly<F>* quotient = nullptr) {
  auto [q, r] = p.divmod(d);
  if (!r.is_zero()) return false;
  if (quotient) *quotient = std::move(q);
  return true;
}

}  // namespace pfaffkit
