#include "pfaffkit/number_field.hpp"

#include <algorithm>
#include <sstream>

namespace pfaffkit {

namespace {

// Trial division bound for the rational root test.
constexpr unsigned long kDivisorSearchLimit = 2'000'000;

std::optional<std::vector<Integer>> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  Integer i = 1;
  while (i * i <= n) {
    if (i > kDivisorSearchLimit) return std::nullopt;
    if (n % i == 0) {
      small.push_back(i);
      Integer other = n / i;
      if (other != i) large.push_back(other);
    }
    ++i;
  }
  std::reverse(large.begin(), large.end());
  small.insert(small.end(), large.begin(), large.end());
  return small;
}

RationalPoly to_poly(const std::vector<Rational>& coords) { return RationalPoly(coords); }

std::vector<Rational> to_coords(const RationalPoly& p, int degree) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(degree, 1)));
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) c[i] = p.coefficients()[i];
  return c;
}

}  // namespace

std::optional<std::vector<Rational>> rational_roots(const RationalPoly& p) {
  if (p.is_zero()) fail(ErrorCode::InvalidInput, "roots of the zero polynomial");
  std::vector<Rational> roots;
  // Strip the factor x^k first so the constant term is nonzero.
  std::size_t low = 0;
  while (p.coefficients()[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  std::vector<Rational> rest(p.coefficients().begin() + static_cast<long>(low), p.coefficients().end());
  if (rest.size() <= 1) return roots;
  Integer lcm_den = 1;
  for (const auto& c : rest) lcm_den = lcm(lcm_den, c.get_den());
  std::vector<Integer> ints;
  for (const auto& c : rest) {
    Rational scaled = c * Rational(lcm_den);
    ints.push_back(scaled.get_num());
  }
  auto num_divs = positive_divisors(ints.front());
  auto den_divs = positive_divisors(ints.back());
  if (!num_divs || !den_divs) return std::nullopt;
  RationalPoly reduced(rest);
  for (const auto& a : *num_divs) {
    for (const auto& b : *den_divs) {
      if (gcd(a, b) != 1) continue;
      for (int sign : {1, -1}) {
        Rational cand = make_rational(a * sign, b);
        if (reduced(cand) == 0) roots.push_back(cand);
      }
    }
  }
  return roots;
}

FieldHandle nf_new(const RationalPoly& minpoly, std::string generator) {
  if (minpoly.degree() < 1) fail(ErrorCode::InvalidInput, "minimal polynomial must have degree >= 1");
  if (minpoly.leading() != 1) fail(ErrorCode::NotMonic, "minimal polynomial must be monic");
  if (!gcd(minpoly, minpoly.derivative()).is_constant())
    fail(ErrorCode::ReduciblePolynomial, "minimal polynomial is not squarefree");
  Irreducibility status = Irreducibility::Asserted;
  if (minpoly.degree() == 1) {
    status = Irreducibility::Verified;
  } else if (minpoly.degree() <= 3) {
    auto roots = rational_roots(minpoly);
    if (roots && !roots->empty())
      fail(ErrorCode::ReduciblePolynomial, "minimal polynomial has rational root " + to_string(roots->front()));
    if (roots) status = Irreducibility::Verified;
  }
  return FieldHandle(new NumberField(minpoly, status, std::move(generator)));
}

bool same_field(const FieldHandle& a, const FieldHandle& b) {
  if (!a || !b) return !a && !b;
  return a == b || a->same_as(*b);
}

int field_degree(const FieldHandle& f) { return f ? f->degree() : 1; }

std::string describe_field(const FieldHandle& f) {
  if (!f) return "Q";
  std::ostringstream os;
  os << "Q(" << f->generator() << ": ";
  bool first = true;
  const auto& c = f->minpoly().coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    Rational v = c[i];
    bool neg = v < 0;
    if (neg) v = -v;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (i == 0 || v != 1) os << to_string(v) << (i > 0 ? "*" : "");
    if (i >= 1) os << f->generator();
    if (i >= 2) os << "^" << i;
  }
  os << ")";
  return os.str();
}

FieldHandle common_field(const FieldHandle& a, const FieldHandle& b) {
  if (!a) return b;
  if (!b) return a;
  if (a == b || a->same_as(*b)) return a;
  fail(ErrorCode::FieldMismatch, describe_field(a) + " vs " + describe_field(b));
}

AlgebraicScalar::AlgebraicScalar(FieldHandle field, std::vector<Rational> coords)
    : field_(std::move(field)) {
  RationalPoly p(std::move(coords));
  if (field_) p = p.divmod(field_->minpoly()).second;
  coords_ = to_coords(p, field_degree(field_));
}

AlgebraicScalar AlgebraicScalar::generator(const FieldHandle& field) {
  if (!field) fail(ErrorCode::InvalidInput, "Q has no generator");
  return AlgebraicScalar(field, {Rational(0), Rational(1)});
}

bool AlgebraicScalar::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

AlgebraicScalar AlgebraicScalar::operator-() const {
  AlgebraicScalar r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

namespace {

AlgebraicScalar combine_linear(const AlgebraicScalar& a, const AlgebraicScalar& b, bool subtract) {
  FieldHandle f = common_field(a.field(), b.field());
  std::vector<Rational> c(static_cast<std::size_t>(field_degree(f)));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (subtract) c[i] = a.coord(i) - b.coord(i);
    else c[i] = a.coord(i) + b.coord(i);
  }
  return AlgebraicScalar(f, std::move(c));
}

}  // namespace

AlgebraicScalar operator+(const AlgebraicScalar& a, const AlgebraicScalar& b) {
  if (!a.field_ && !b.field_) return AlgebraicScalar(Rational(a.coords_[0] + b.coords_[0]));
  return combine_linear(a, b, false);
}

AlgebraicScalar operator-(const AlgebraicScalar& a, const AlgebraicScalar& b) {
  if (!a.field_ && !b.field_) return AlgebraicScalar(Rational(a.coords_[0] - b.coords_[0]));
  return combine_linear(a, b, true);
}

AlgebraicScalar operator*(const AlgebraicScalar& a, const AlgebraicScalar& b) {
  if (!a.field_ && !b.field_) return AlgebraicScalar(Rational(a.coords_[0] * b.coords_[0]));
  FieldHandle f = common_field(a.field_, b.field_);
  RationalPoly prod = to_poly(a.coords_) * to_poly(b.coords_);
  return AlgebraicScalar(f, prod.coefficients());
}

AlgebraicScalar AlgebraicScalar::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (!field_ || std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return c == 0; })) {
    Rational v = 1 / coords_[0];
    return field_ ? AlgebraicScalar(field_, {v}) : AlgebraicScalar(v);
  }
  auto eg = extended_gcd(to_poly(coords_), field_->minpoly());
  if (!eg.gcd.is_constant())
    fail(ErrorCode::ReduciblePolynomial, "zero divisor found: asserted minimal polynomial is reducible");
  return AlgebraicScalar(field_, eg.s.coefficients());
}

AlgebraicScalar operator/(const AlgebraicScalar& a, const AlgebraicScalar& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
  if (!a.field_ && !b.field_) return AlgebraicScalar(Rational(a.coords_[0] / b.coords_[0]));
  common_field(a.field_, b.field_);
  return a * b.inverse();
}

AlgebraicScalar AlgebraicScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  AlgebraicScalar result(1L), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const AlgebraicScalar& a, const AlgebraicScalar& b) {
  if (a.field_ && b.field_ && !same_field(a.field_, b.field_)) return false;
  std::size_t n = std::max(a.coords_.size(), b.coords_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a.coord(i) != b.coord(i)) return false;
  return true;
}

AlgebraicScalar scalar_arith(const AlgebraicScalar& a, const AlgebraicScalar& b, ScalarOp op) {
  switch (op) {
    case ScalarOp::Add: return a + b;
    case ScalarOp::Sub: return a - b;
    case ScalarOp::Mul: return a * b;
    case ScalarOp::Div: return a / b;
  }
  fail(ErrorCode::InternalInvariant, "unknown scalar op");
}

std::optional<Rational> is_rational(const AlgebraicScalar& a) {
  for (std::size_t i = 1; i < a.coords().size(); ++i)
    if (a.coords()[i] != 0) return std::nullopt;
  return a.coords()[0];
}

std::optional<Rational> rational_multiple(const AlgebraicScalar& a, const AlgebraicScalar& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "rational_multiple with zero divisor");
  return is_rational(a / b);
}

std::optional<AlgebraicScalar> field_sqrt(const AlgebraicScalar& a) {
  const FieldHandle& f = a.field();
  auto wrap = [&](const Rational& v) { return f ? AlgebraicScalar(f, {v}) : AlgebraicScalar(v); };
  if (a.is_zero()) return wrap(Rational(0));
  if (auto q = is_rational(a)) {
    if (auto s = rational_sqrt(*q)) return wrap(*s);
  }
  if (!f || f->degree() != 2) return std::nullopt;
  // theta^2 = -p*theta - q. Seek (u + v*theta)^2 = x + y*theta with v != 0:
  // with s = v^2, (p^2-4q) s^2 + (2yp - 4x) s + y^2 = 0 and u = (y + p s)/(2v).
  const Rational p = f->minpoly().coeff(1);
  const Rational q = f->minpoly().coeff(0);
  const Rational x = a.coord(0), y = a.coord(1);
  const Rational qa = p * p - 4 * q, qb = 2 * y * p - 4 * x, qc = y * y;
  std::vector<Rational> svals;
  if (qa == 0) {
    if (qb != 0) svals.push_back(-qc / qb);
  } else {
    Rational disc = qb * qb - 4 * qa * qc;
    if (auto sd = rational_sqrt(disc)) {
      svals.push_back((-qb + *sd) / (2 * qa));
      svals.push_back((-qb - *sd) / (2 * qa));
    }
  }
  for (const Rational& s : svals) {
    if (s <= 0) continue;
    auto v = rational_sqrt(s);
    if (!v) continue;
    Rational u = (y + p * s) / (2 * *v);
    AlgebraicScalar cand(f, {u, *v});
    if (cand * cand == a) return cand;
  }
  return std::nullopt;
}

std::string to_string(const AlgebraicScalar& a) {
  if (auto q = is_rational(a)) return to_string(*q);
  std::ostringstream os;
  os << "(";
  bool first = true;
  const std::string& g = a.field()->generator();
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    Rational v = a.coords()[i];
    if (v == 0) continue;
    bool neg = v < 0;
    if (neg) v = -v;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (i == 0 || v != 1) os << to_string(v) << (i > 0 ? "*" : "");
    if (i >= 1) os << g;
    if (i >= 2) os << "^" << i;
  }
  os << ")";
  return os.str();
}

}  // namespace pfaffkit
