#include "pfaffkit/base_field.hpp"

namespace pfaffkit {

KtElement BaseDiffField::derive(const KtElement& c) const {
  if (is_constant()) return KtElement();
  return c.derivative();
}

KtElement BaseDiffField::t() const {
  if (is_constant()) fail(ErrorCode::InvalidInput, "constant base field has no independent variable");
  return KtElement::variable();
}

void BaseDiffField::check_member(const KtElement& c) const {
  if (is_constant() && !c.is_constant())
    fail(ErrorCode::InvalidInput, "coefficient depends on t over a constant base field");
  for (const auto* p : {&c.num(), &c.den()})
    common_field(field_, coefficient_field(*p));
}

namespace {

using KtPoly = std::vector<UniPoly>;

void trim(KtPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Clears the t-denominators and divides out the content.
KtPoly primitive(const Poly<KtElement>& p) {
  UniPoly l = UniPoly::constant(AlgebraicScalar(1L));
  for (const auto& c : p.coefficients()) l = l * c.den().divmod(gcd(l, c.den())).first;
  KtPoly out;
  for (const auto& c : p.coefficients()) out.push_back(c.num() * l.divmod(c.den()).first);
  trim(out);
  return out;
}

void make_primitive(KtPoly& p) {
  UniPoly content;
  for (const auto& c : p) {
    if (c.is_zero()) continue;
    content = content.is_zero() ? c.monic() : gcd(content, c);
    if (content.is_constant()) return;
  }
  for (auto& c : p) c = c.divmod(content).first;
}

// lc(b)^(deg a - deg b + 1) * a reduced modulo b.
KtPoly pseudo_remainder(KtPoly a, const KtPoly& b) {
  const std::size_t steps = a.size() - b.size() + 1;
  for (std::size_t k = 0; k < steps; ++k) {
    const std::size_t top = a.size() - 1 - k;
    const UniPoly la = a[top];
    for (auto& c : a) c = c * b.back();
    const std::size_t shift = top + 1 - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
  }
  a.resize(b.size() - 1);
  trim(a);
  return a;
}

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = a.divmod(b);
  if (!r.is_zero()) fail(ErrorCode::InternalInvariant, "inexact division in subresultant sequence");
  return q;
}

}  // namespace

// Subresultant remainder sequence: every division is exact in K[t], so no
// gcd of coefficients is needed until the end.
Poly<KtElement> gcd_over_kt(const Poly<KtElement>& a, const Poly<KtElement>& b) {
  if (a.is_zero() && b.is_zero()) fail(ErrorCode::DivisionByZeroPolynomial, "gcd of two zero polynomials");
  KtPoly x = primitive(a), y = primitive(b);
  if (x.size() < y.size()) std::swap(x, y);
  if (y.empty()) {
    make_primitive(x);
  } else {
    make_primitive(x);
    make_primitive(y);
    UniPoly g = UniPoly::constant(AlgebraicScalar(1L)), h = g;
    for (;;) {
      const unsigned delta = static_cast<unsigned>(x.size() - y.size());
      KtPoly r = pseudo_remainder(x, y);
      if (r.empty()) break;
      const UniPoly divisor = g * h.pow(delta);
      for (auto& c : r) c = exact_quotient(c, divisor);
      x = std::move(y);
      y = std::move(r);
      g = x.back();
      h = delta == 0 ? h : exact_quotient(g.pow(delta), h.pow(delta - 1));
    }
    x = std::move(y);
    make_primitive(x);
  }
  const UniPoly lead = x.back();
  std::vector<KtElement> c;
  for (const auto& v : x) c.emplace_back(v, lead);
  return Poly<KtElement>(std::move(c));
}

std::string to_string(const KtElement& c, const std::string& tvar) {
  if (c.den().is_constant()) return to_string(c.num(), tvar);
  std::string num = to_string(c.num(), tvar);
  std::string den = to_string(c.den(), tvar);
  const bool num_simple = num.find(' ') == std::string::npos && num.find('/') == std::string::npos;
  const bool den_simple = den.find(' ') == std::string::npos && den.find('*') == std::string::npos &&
                          den.find('^') == std::string::npos && den.find('/') == std::string::npos;
  return (num_simple ? num : "(" + num + ")") + "/" + (den_simple ? den : "(" + den + ")");
}

bool is_atomic_text(const KtElement& c) {
  if (!c.den().is_constant()) return false;
  if (c.num().is_zero()) return true;
  if (c.num().degree() > 0) {
    // a single monomial with unit coefficient, such as t or t^2
    for (std::size_t i = 0; i + 1 < c.num().coefficients().size(); ++i)
      if (!c.num().coefficients()[i].is_zero()) return false;
    auto q = is_rational(c.num().leading());
    return q && *q == 1;
  }
  auto q = is_rational(c.num().coeff(0));
  return q && *q >= 0 && q->get_den() == 1;
}

}  // namespace pfaffkit
