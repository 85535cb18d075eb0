#include "pfaffkit/uni_poly.hpp"

#include <sstream>

namespace pfaffkit {

PolyToolkit poly_toolkit(const UniPoly& p, const UniPoly& q) {
  PolyToolkit out;
  out.gcd = gcd(p, q);
  out.p_prime = p.derivative();
  out.coprime = out.gcd.is_constant();
  auto [quo, rem] = p.divmod(q);
  out.divides = rem.is_zero();
  out.quotient = std::move(quo);
  out.remainder = std::move(rem);
  return out;
}

UniPoly from_rational(const RationalPoly& p) {
  std::vector<AlgebraicScalar> c;
  for (const auto& v : p.coefficients()) c.emplace_back(v);
  return UniPoly(std::move(c));
}

FieldHandle coefficient_field(const UniPoly& p) {
  FieldHandle f;
  for (const auto& c : p.coefficients()) f = common_field(f, c.field());
  return f;
}

namespace {

// Candidate rational roots come from any coordinate polynomial that is not
// identically zero: a rational root of p is a common root of all of them.
std::optional<std::vector<Rational>> rational_root_candidates(const UniPoly& p) {
  const int d = field_degree(coefficient_field(p));
  for (int j = 0; j < d; ++j) {
    std::vector<Rational> c;
    for (const auto& a : p.coefficients()) c.push_back(a.coord(static_cast<std::size_t>(j)));
    RationalPoly coord(c);
    if (coord.is_zero()) continue;
    if (coord.is_constant()) return std::vector<Rational>{};
    return rational_roots(coord);
  }
  return std::vector<Rational>{};
}

void add_root(std::vector<LinearFactor>& out, const AlgebraicScalar& root) {
  for (auto& f : out) {
    if (f.root == root) {
      ++f.multiplicity;
      return;
    }
  }
  out.push_back({root, 1});
}

}  // namespace

std::optional<std::vector<LinearFactor>> split_linear(const UniPoly& p) {
  if (p.is_zero()) fail(ErrorCode::InvalidInput, "cannot split the zero polynomial");
  std::vector<LinearFactor> out;
  UniPoly rest = p.monic();
  auto candidates = rational_root_candidates(rest);
  if (!candidates) return std::nullopt;
  for (const Rational& r : *candidates) {
    AlgebraicScalar root(r);
    UniPoly lin({-root, AlgebraicScalar(1L)});
    UniPoly quo;
    while (rest.degree() >= 1 && divides(lin, rest, &quo)) {
      add_root(out, root);
      rest = quo;
    }
  }
  // Repeated irrational roots: peel off gcd(rest, rest') style multiplicity.
  while (rest.degree() >= 3) {
    UniPoly g = gcd(rest, rest.derivative());
    if (g.degree() < 1 || g.degree() > 2) break;
    auto inner = split_linear(g);
    if (!inner) return std::nullopt;
    for (const auto& f : *inner) {
      UniPoly lin({-f.root, AlgebraicScalar(1L)});
      UniPoly quo;
      while (rest.degree() >= 1 && divides(lin, rest, &quo)) {
        add_root(out, f.root);
        rest = quo;
      }
    }
  }
  if (rest.degree() == 1) {
    add_root(out, -rest.coeff(0));
  } else if (rest.degree() == 2) {
    const AlgebraicScalar b = rest.coeff(1), c = rest.coeff(0);
    auto s = field_sqrt(b * b - AlgebraicScalar(4L) * c);
    if (!s) return std::nullopt;
    const AlgebraicScalar half(Rational(1, 2));
    add_root(out, (-b + *s) * half);
    add_root(out, (-b - *s) * half);
  } else if (rest.degree() > 2) {
    return std::nullopt;
  }
  return out;
}

std::string to_string(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    AlgebraicScalar v = c[i];
    bool neg = false;
    if (auto q = is_rational(v); q && *q < 0) {
      neg = true;
      v = -v;
    }
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    const bool unit = is_rational(v) && *is_rational(v) == 1;
    if (i == 0) {
      os << to_string(v);
      continue;
    }
    if (!unit) os << to_string(v) << "*";
    os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace pfaffkit
