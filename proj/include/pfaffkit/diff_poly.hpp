#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pfaffkit/base_field.hpp"

namespace pfaffkit {

/// Polynomial ring K(t)[y1..yn] (or K[y1..yn]) with a fixed variable list.
struct PolyRing {
  BaseDiffField base;
  std::vector<std::string> vars;

  std::optional<std::size_t> index_of(const std::string& name) const;
};

using RingHandle = std::shared_ptr<const PolyRing>;

RingHandle make_ring(BaseDiffField base, std::vector<std::string> vars);
bool same_ring(const RingHandle& a, const RingHandle& b);

using Exponents = std::vector<int>;

/// Graded lexicographic order: total degree first, then the exponent of the
/// last variable, so y1 < y2 < ... < yn.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Multivariate polynomial over the base differential field. No zero
/// coefficients are stored.
class DiffPoly {
 public:
  using Terms = std::map<Exponents, KtElement, GrlexLess>;

  explicit DiffPoly(RingHandle ring);

  static DiffPoly constant(RingHandle ring, const KtElement& c);
  static DiffPoly variable(RingHandle ring, std::size_t index);
  static DiffPoly variable(RingHandle ring, const std::string& name);
  static DiffPoly monomial(RingHandle ring, Exponents e, const KtElement& c);

  const RingHandle& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  std::size_t nvars() const { return ring_->vars.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  KtElement constant_term() const;
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool mentions(std::size_t var) const { return degree_in(var) > 0; }
  /// Largest term in grlex order. Requires a nonzero polynomial.
  const Terms::value_type& leading_term() const { return *terms_.rbegin(); }

  DiffPoly operator-() const;
  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  DiffPoly scaled(const KtElement& c) const;
  DiffPoly pow(unsigned e) const;

  friend bool operator==(const DiffPoly& a, const DiffPoly& b);

  /// Same polynomial in a ring whose variables include ours (matched by name).
  DiffPoly embed(const RingHandle& target) const;

 private:
  void add_term(const Exponents& e, const KtElement& c);
  void check_same_ring(const DiffPoly& o) const;

  RingHandle ring_;
  Terms terms_;
};

/// P^delta: the derivation applied to every coefficient.
DiffPoly coeff_derivation(const DiffPoly& p);

DiffPoly partial_derivative(const DiffPoly& p, std::size_t var);
DiffPoly partial_derivative(const DiffPoly& p, const std::string& var);

/// Univariate view; requires a one-variable ring.
Poly<KtElement> to_univariate(const DiffPoly& p);
DiffPoly from_univariate(const RingHandle& ring, const Poly<KtElement>& p);

std::string to_string(const DiffPoly& p);

/// Quotient of differential polynomials. In one variable it is reduced by the
/// full gcd; with several variables only common monomial factors cancel, so
/// equality is decided by cross-multiplication.
class DiffRatFunc {
 public:
  explicit DiffRatFunc(DiffPoly num);
  DiffRatFunc(DiffPoly num, DiffPoly den);

  const DiffPoly& num() const { return num_; }
  const DiffPoly& den() const { return den_; }
  const RingHandle& ring() const { return num_.ring(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Numerator divided by the constant denominator; requires is_polynomial().
  DiffPoly as_polynomial() const;

  DiffRatFunc operator-() const;
  friend DiffRatFunc operator+(const DiffRatFunc& a, const DiffRatFunc& b);
  friend DiffRatFunc operator-(const DiffRatFunc& a, const DiffRatFunc& b);
  friend DiffRatFunc operator*(const DiffRatFunc& a, const DiffRatFunc& b);
  friend DiffRatFunc operator/(const DiffRatFunc& a, const DiffRatFunc& b);
  DiffRatFunc inverse() const;
  DiffRatFunc pow(long e) const;

  /// Equality in the fraction field (cross-multiplied).
  friend bool operator==(const DiffRatFunc& a, const DiffRatFunc& b);

  DiffRatFunc embed(const RingHandle& target) const;

 private:
  void normalize();

  DiffPoly num_;
  DiffPoly den_;
};

/// f(values...) for f in a ring with as many variables as `values`; all
/// values must share one target ring and base field.
DiffRatFunc evaluate(const DiffRatFunc& f, std::span<const DiffRatFunc> values);

/// f(h) for a univariate f.
DiffRatFunc substitute(const DiffRatFunc& f, const DiffRatFunc& h);

/// f(h) * S^power where S is the denominator of h.
DiffRatFunc substitute_cleared(const DiffRatFunc& f, const DiffRatFunc& h, unsigned power);

std::string to_string(const DiffRatFunc& f);

}  // namespace pfaffkit
