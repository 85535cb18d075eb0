#include "pfaffkit/lowering.hpp"

#include <algorithm>

namespace pfaffkit {

namespace {

std::string symbol_key(const Expr& e) { return e.name + std::string(static_cast<std::size_t>(e.primes), '\''); }

[[noreturn]] void unknown_symbol(const Expr& e) {
  fail(ErrorCode::UnknownVariable,
       "unknown symbol '" + symbol_key(e) + "'" + (e.column ? " at column " + std::to_string(e.column) : ""));
}

bool is_independent_name(const std::string& s) { return s == "t" || s == "z"; }

}  // namespace

FieldHandle build_field(const std::optional<FieldDecl>& decl) {
  if (!decl || !decl->generator) return nullptr;
  const std::string& g = *decl->generator;
  if (is_independent_name(g)) fail(ErrorCode::InvalidInput, "generator name '" + g + "' is reserved");
  return nf_new(lower_rational_poly(*decl->minpoly, g), g);
}

RationalPoly lower_rational_poly(const Expr& e, const std::string& var) {
  switch (e.kind) {
    case Expr::Kind::Num:
      return RationalPoly::constant(Rational(e.value));
    case Expr::Kind::Sym:
      if (e.name != var || e.primes) unknown_symbol(e);
      return RationalPoly::x();
    case Expr::Kind::Neg:
      return -lower_rational_poly(e.args[0], var);
    case Expr::Kind::Pow:
      return lower_rational_poly(e.args[0], var).pow(e.exponent);
    default:
      break;
  }
  RationalPoly a = lower_rational_poly(e.args[0], var);
  RationalPoly b = lower_rational_poly(e.args[1], var);
  switch (e.kind) {
    case Expr::Kind::Add:
      return a + b;
    case Expr::Kind::Sub:
      return a - b;
    case Expr::Kind::Mul:
      return a * b;
    default:
      if (b.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero in polynomial");
      if (!b.is_constant()) fail(ErrorCode::InvalidInput, "polynomial expected, found a division by " + var);
      return a.scaled(Rational(1 / b.coeff(0)));
  }
}

std::optional<std::string> detect_tvar(const std::vector<const Expr*>& exprs, const FieldHandle& field,
                                       const std::vector<std::string>& reserved) {
  bool has_t = false, has_z = false;
  for (const Expr* e : exprs) {
    for (const auto& [name, primes] : symbols_of(*e)) {
      if (primes || (field && field->generator() == name)) continue;
      if (std::find(reserved.begin(), reserved.end(), name) != reserved.end()) continue;
      has_t = has_t || name == "t";
      has_z = has_z || name == "z";
    }
  }
  if (has_t && has_z) fail(ErrorCode::InvalidInput, "both t and z used as independent variable");
  if (has_t) return "t";
  if (has_z) return "z";
  return std::nullopt;
}

DiffRatFunc lower(const Expr& e, const RingHandle& ring) {
  auto constant = [&](const KtElement& c) { return DiffRatFunc(DiffPoly::constant(ring, c)); };
  const BaseDiffField& base = ring->base;
  switch (e.kind) {
    case Expr::Kind::Num:
      return constant(KtElement(AlgebraicScalar(Rational(e.value))));
    case Expr::Kind::Sym: {
      if (auto idx = ring->index_of(symbol_key(e))) return DiffRatFunc(DiffPoly::variable(ring, *idx));
      if (e.primes == 0 && base.field() && base.field()->generator() == e.name)
        return constant(KtElement(AlgebraicScalar::generator(base.field())));
      if (e.primes == 0 && base.tvar() && *base.tvar() == e.name) return constant(base.t());
      unknown_symbol(e);
    }
    case Expr::Kind::Neg:
      return -lower(e.args[0], ring);
    case Expr::Kind::Pow:
      return lower(e.args[0], ring).pow(static_cast<long>(e.exponent));
    default:
      break;
  }
  DiffRatFunc a = lower(e.args[0], ring);
  DiffRatFunc b = lower(e.args[1], ring);
  switch (e.kind) {
    case Expr::Kind::Add:
      return a + b;
    case Expr::Kind::Sub:
      return a - b;
    case Expr::Kind::Mul:
      return a * b;
    default:
      if (b.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero at column " + std::to_string(e.column));
      return a / b;
  }
}

KtElement lower_coefficient(const Expr& e, const BaseDiffField& base) {
  DiffRatFunc f = lower(e, make_ring(base, {}));
  return f.as_polynomial().constant_term();
}

namespace {

void flatten_factors(const Expr& e, int sign, std::vector<std::pair<const Expr*, int>>& out) {
  if (e.kind == Expr::Kind::Mul || e.kind == Expr::Kind::Div) {
    flatten_factors(e.args[0], sign, out);
    flatten_factors(e.args[1], e.kind == Expr::Kind::Mul ? sign : -sign, out);
  } else {
    out.emplace_back(&e, sign);
  }
}

std::optional<FactoredRatFunc> syntactic_factors(const Expr& rhs, const RingHandle& ring) {
  std::vector<std::pair<const Expr*, int>> pieces;
  flatten_factors(rhs, 1, pieces);
  AlgebraicScalar lead(1L);
  std::vector<LinearFactor> zeros, poles;
  for (auto [piece, sign] : pieces) {
    unsigned mult = 1;
    if (piece->kind == Expr::Kind::Pow) {
      mult = piece->exponent;
      piece = &piece->args[0];
    }
    DiffRatFunc g = lower(*piece, ring);
    if (!g.is_polynomial()) return std::nullopt;
    DiffPoly p = g.as_polynomial();
    if (p.is_zero() || p.total_degree() > 1) return std::nullopt;
    if (mult == 0) continue;
    if (p.total_degree() == 0) {
      AlgebraicScalar c = p.constant_term().constant_value().pow(static_cast<long>(mult));
      lead = sign > 0 ? lead * c : lead / c;
      continue;
    }
    const UniPoly u = to_unipoly(p);
    const AlgebraicScalar a = u.coeff(1);
    LinearFactor lf{-(u.coeff(0) / a), static_cast<int>(mult)};
    const AlgebraicScalar scale = a.pow(static_cast<long>(mult));
    if (sign > 0) {
      lead = lead * scale;
      zeros.push_back(lf);
    } else {
      lead = lead / scale;
      poles.push_back(lf);
    }
  }
  if (lead.is_zero()) return std::nullopt;
  return make_factored(lead, std::move(zeros), std::move(poles));
}

void require_derivative_lhs(const Expr& lhs, const char* form) {
  if (lhs.kind != Expr::Kind::Sym || lhs.primes != 1)
    fail(ErrorCode::InvalidInput, std::string("expected ") + form);
}

}  // namespace

OrderOneOde lower_order_one(const Equation& eq) {
  require_derivative_lhs(eq.lhs, "an equation of the form y' = f(y)");
  const std::string& y = eq.lhs.name;
  FieldHandle field = build_field(eq.field);
  if (is_independent_name(y) || (field && field->generator() == y))
    fail(ErrorCode::InvalidInput, "'" + y + "' cannot be the dependent variable");
  auto tvar = detect_tvar({&eq.rhs}, field, {y});
  BaseDiffField base = tvar ? BaseDiffField::rational_functions(field, *tvar) : BaseDiffField::constants(field);
  RingHandle ring = make_ring(base, {y});
  OrderOneOde out{ring, lower(eq.rhs, ring), std::nullopt};
  if (base.is_constant() && !out.f.is_zero()) {
    out.factored = syntactic_factors(eq.rhs, ring);
    if (out.factored && !(to_diff_ratfunc(*out.factored, ring) == out.f))
      fail(ErrorCode::InternalInvariant, "syntactic factorization disagrees with the right-hand side");
  }
  return out;
}

std::optional<WeierstrassData> lower_weierstrass(const Equation& eq) {
  if (eq.lhs.kind != Expr::Kind::Pow || eq.lhs.exponent != 2) return std::nullopt;
  require_derivative_lhs(eq.lhs.args[0], "y'^2 = 4*y^3 - g2*y - g3");
  const std::string& y = eq.lhs.args[0].name;
  FieldHandle field = build_field(eq.field);
  if (detect_tvar({&eq.rhs}, field, {y}))
    fail(ErrorCode::InvalidInput, "Weierstrass form needs constant coefficients");
  RingHandle ring = make_ring(BaseDiffField::constants(field), {y});
  DiffRatFunc f = lower(eq.rhs, ring);
  if (!f.is_polynomial()) fail(ErrorCode::InvalidInput, "Weierstrass right-hand side must be a polynomial");
  const UniPoly u = to_unipoly(f.as_polynomial());
  if (u.degree() != 3 || !(u.coeff(3) == AlgebraicScalar(4L)) || !u.coeff(2).is_zero())
    fail(ErrorCode::InvalidInput, "expected 4*y^3 - g2*y - g3");
  return WeierstrassData{-u.coeff(1), -u.coeff(0)};
}

LinearOde lower_linear(const Equation& eq) {
  const Expr diff = Expr::binary(Expr::Kind::Sub, eq.lhs, eq.rhs);
  FieldHandle field = build_field(eq.field);
  std::string var;
  int order = -1;
  for (const auto& [name, primes] : symbols_of(diff)) {
    if (is_independent_name(name) && primes == 0) continue;
    if (field && field->generator() == name && primes == 0) continue;
    if (!var.empty() && name != var) fail(ErrorCode::UnknownVariable, "unknown symbol '" + name + "'");
    var = name;
    order = std::max(order, primes);
  }
  if (order < 1) fail(ErrorCode::InvalidInput, "expected a linear differential equation of order >= 1");
  std::vector<std::string> names;
  for (int k = 0; k <= order; ++k) names.push_back(var + std::string(static_cast<std::size_t>(k), '\''));
  auto tvar = detect_tvar({&diff}, field, {var});
  BaseDiffField base = tvar ? BaseDiffField::rational_functions(field, *tvar) : BaseDiffField::constants(field);
  RingHandle ring = make_ring(base, names);
  DiffRatFunc f = lower(diff, ring);
  if (!f.is_polynomial()) fail(ErrorCode::InvalidInput, "equation is not polynomial in " + var);
  const DiffPoly p = f.as_polynomial();
  std::vector<KtElement> coeffs(static_cast<std::size_t>(order) + 1, KtElement(0L));
  for (const auto& [e, c] : p.terms()) {
    int deg = 0;
    std::size_t at = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      deg += e[i];
      if (e[i]) at = i;
    }
    if (deg != 1) fail(ErrorCode::InvalidInput, "equation is not linear homogeneous in " + var);
    coeffs[at] = c;
  }
  const KtElement lead = coeffs.back();
  LinearOde out{base, var, {}, !(lead == KtElement(1L))};
  for (auto& c : coeffs) out.coeffs.push_back(c / lead);
  return out;
}

PresentationCandidate lower_candidate(const Expr& e, const FieldHandle& field) {
  std::string var = "x";
  for (const auto& [name, primes] : symbols_of(e)) {
    if (primes || (field && field->generator() == name)) continue;
    var = name;
    break;
  }
  RingHandle ring = make_ring(BaseDiffField::constants(field), {var});
  DiffRatFunc h = lower(e, ring);
  return {to_unipoly(h.num()), to_unipoly(h.den())};
}

}  // namespace pfaffkit
