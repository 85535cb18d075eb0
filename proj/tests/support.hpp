#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "pfaffkit/chain_script.hpp"
#include "pfaffkit/criteria.hpp"
#include "pfaffkit/lowering.hpp"

namespace testkit {

using namespace pfaffkit;
using Rng = std::mt19937_64;

/// Parses `text` into `ring`.
inline DiffRatFunc rf(const RingHandle& ring, const std::string& text) { return lower(parse_expression(text), ring); }
inline DiffPoly dp(const RingHandle& ring, const std::string& text) { return rf(ring, text).as_polynomial(); }

inline RingHandle qt_ring(std::vector<std::string> vars, FieldHandle field = {}, std::string tvar = "t") {
  return make_ring(BaseDiffField::rational_functions(std::move(field), std::move(tvar)), std::move(vars));
}
inline RingHandle const_ring(std::vector<std::string> vars, FieldHandle field = {}) {
  return make_ring(BaseDiffField::constants(std::move(field)), std::move(vars));
}

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational rand_rational(Rng& rng, long num = 9, long den = 6) {
  return make_rational(Integer(uniform(rng, -num, num)), Integer(uniform(rng, 1, den)));
}

inline FieldHandle sqrt2() {
  static const FieldHandle f = nf_new(RationalPoly({Rational(-2), Rational(0), Rational(1)}), "r");
  return f;
}

inline FieldHandle cbrt2() {
  static const FieldHandle f = nf_new(RationalPoly({Rational(-2), Rational(0), Rational(0), Rational(1)}), "s");
  return f;
}

inline AlgebraicScalar rand_scalar(Rng& rng, const FieldHandle& field, long num = 9) {
  std::vector<Rational> c;
  for (int i = 0; i < field_degree(field); ++i) c.push_back(rand_rational(rng, num));
  return field ? AlgebraicScalar(field, c) : AlgebraicScalar(c[0]);
}

inline AlgebraicScalar rand_nonzero(Rng& rng, const FieldHandle& field) {
  for (;;) {
    AlgebraicScalar a = rand_scalar(rng, field);
    if (!a.is_zero()) return a;
  }
}

inline UniPoly rand_unipoly(Rng& rng, const FieldHandle& field, int max_deg) {
  std::vector<AlgebraicScalar> c;
  const int d = static_cast<int>(uniform(rng, 0, max_deg));
  for (int i = 0; i <= d; ++i) c.push_back(rand_scalar(rng, field, 5));
  return UniPoly(c);
}

inline UniPoly rand_nonzero_unipoly(Rng& rng, const FieldHandle& field, int max_deg) {
  for (;;) {
    UniPoly p = rand_unipoly(rng, field, max_deg);
    if (!p.is_zero()) return p;
  }
}

/// Random element of Q(t): small numerator and denominator in t.
inline KtElement rand_kt(Rng& rng, const FieldHandle& field, int max_deg = 2) {
  UniPoly n = rand_unipoly(rng, field, max_deg);
  UniPoly d = uniform(rng, 0, 2) == 0 ? rand_nonzero_unipoly(rng, field, 1) : UniPoly::constant(AlgebraicScalar(1L));
  return KtElement(n, d);
}

inline KtElement rand_coefficient(Rng& rng, const BaseDiffField& base) {
  if (base.is_constant()) return KtElement(rand_scalar(rng, base.field(), 5));
  return rand_kt(rng, base.field());
}

inline DiffPoly rand_diffpoly(Rng& rng, const RingHandle& ring, int max_deg, int terms) {
  DiffPoly p(ring);
  for (int i = 0; i < terms; ++i) {
    Exponents e(ring->vars.size(), 0);
    int budget = static_cast<int>(uniform(rng, 0, max_deg));
    for (auto& x : e) {
      x = static_cast<int>(uniform(rng, 0, budget));
      budget -= x;
    }
    p += DiffPoly::monomial(ring, e, rand_coefficient(rng, ring->base));
  }
  return p;
}

/// Distinct random scalars, none of them in `avoid`.
inline std::vector<AlgebraicScalar> distinct_scalars(Rng& rng, const FieldHandle& field, int count,
                                                      const std::vector<AlgebraicScalar>& avoid = {}) {
  std::vector<AlgebraicScalar> out;
  while (static_cast<int>(out.size()) < count) {
    AlgebraicScalar a = rand_scalar(rng, field, 6);
    bool fresh = true;
    for (const auto& b : out) fresh = fresh && !(a == b);
    for (const auto& b : avoid) fresh = fresh && !(a == b);
    if (fresh) out.push_back(a);
  }
  return out;
}

inline std::vector<GroupExpr> group_atoms(int max_n = 4, int max_k = 3) {
  std::vector<GroupExpr> out = {GroupExpr::atom(AtomKind::Ga), GroupExpr::atom(AtomKind::Gm),
                                GroupExpr::atom(AtomKind::GaxGm), GroupExpr::atom(AtomKind::Elliptic),
                                GroupExpr::atom(AtomKind::Finite)};
  for (int n = 1; n <= max_n; ++n) {
    out.push_back(GroupExpr::atom(AtomKind::SL, n));
    out.push_back(GroupExpr::atom(AtomKind::GL, n));
    out.push_back(GroupExpr::atom(AtomKind::PSL, n));
  }
  for (int k = 1; k <= max_k; ++k) out.push_back(GroupExpr::atom(AtomKind::Torus, k));
  return out;
}

/// Trees of depth <= 2 over the atoms: atoms, binary products and
/// extensions, and Sub of an atom.
inline std::vector<GroupExpr> groups_depth2() {
  const auto atoms = group_atoms();
  std::vector<GroupExpr> out = atoms;
  for (const auto& a : atoms) {
    out.push_back(GroupExpr::subgroup_of(a));
    for (const auto& b : atoms) {
      out.push_back(GroupExpr::product({a, b}));
      out.push_back(GroupExpr::extension(a, b));
    }
  }
  return out;
}

/// Calls fn on every tree of depth <= 3 (binary products and extensions).
template <typename Fn>
void for_each_group_depth3(Fn&& fn) {
  const auto level2 = groups_depth2();
  for (const auto& g : level2) {
    fn(g);
    if (g.node() != GroupExpr::Node::Atom) fn(GroupExpr::subgroup_of(g));
  }
  for (const auto& a : level2) {
    for (const auto& b : level2) {
      if (a.node() == GroupExpr::Node::Atom && b.node() == GroupExpr::Node::Atom) continue;
      fn(GroupExpr::product({a, b}));
      fn(GroupExpr::extension(a, b));
    }
  }
}

/// Random constant-coefficient f with 1..5 simple zeros and up to four
/// poles of multiplicity at most two.
inline FactoredRatFunc rand_factored(Rng& rng, const FieldHandle& field) {
  const int nz = static_cast<int>(uniform(rng, 1, 5));
  const int np = static_cast<int>(uniform(rng, 0, 4));
  const auto zeros = distinct_scalars(rng, field, nz);
  const auto poles = distinct_scalars(rng, field, np, zeros);
  std::vector<LinearFactor> z, p;
  for (const auto& a : zeros) z.push_back({a, 1});
  for (const auto& b : poles) p.push_back({b, static_cast<int>(uniform(rng, 1, 2))});
  return make_factored(rand_nonzero(rng, field), z, p);
}

/// Structural witness check: the series starts at g, every quotient is
/// allowed, and each step's normal subgroup is the next step's group.
inline bool witness_valid(const GroupExpr& g, const GroupVerdict& v, const AllowedSet& allowed) {
  if (v.truth != Truth::Yes) return true;
  if (v.series.empty() || v.series.front().group != to_string(g)) return false;
  for (std::size_t i = 0; i < v.series.size(); ++i) {
    if (!factor_allowed(v.series[i].quotient, allowed)) return false;
    if (i + 1 < v.series.size() && v.series[i].normal != v.series[i + 1].group) return false;
  }
  return true;
}

/// Partial-fraction residues of 1/f = B/(cA) at the simple roots of A,
/// obtained by solving the linear system B = c * sum_k r_k A/(x - a_k) + c*q*A
/// for the unknowns r_k by Gaussian elimination over the field.
inline std::vector<AlgebraicScalar> partial_fraction_residues(const FactoredRatFunc& f) {
  const UniPoly a = zeros_poly(f);
  const UniPoly rem = poles_poly(f).divmod(a).second;
  const std::size_t n = f.zeros.size();
  // rem = sum_k r_k * A/(x - a_k): one equation per coefficient of x^row.
  std::vector<std::vector<AlgebraicScalar>> m(n, std::vector<AlgebraicScalar>(n + 1));
  for (std::size_t k = 0; k < n; ++k) {
    const UniPoly basis = a.divmod(UniPoly({-f.zeros[k].root, AlgebraicScalar(1L)})).first;
    for (std::size_t row = 0; row < n; ++row) m[row][k] = basis.coeff(row);
  }
  for (std::size_t row = 0; row < n; ++row) m[row][n] = rem.coeff(row);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (m[piv][col].is_zero()) ++piv;
    std::swap(m[piv], m[col]);
    const AlgebraicScalar inv = m[col][col].inverse();
    for (auto& x : m[col]) x = x * inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      const AlgebraicScalar factor = m[row][col];
      for (std::size_t j = 0; j <= n; ++j) m[row][j] = m[row][j] - factor * m[col][j];
    }
  }
  std::vector<AlgebraicScalar> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(m[k][n] / f.leading);
  return out;
}

/// Riccati oracle: expand sum a_k y^(k) with y' = u*y in a ring carrying
/// y and u, u', ..., and return the cofactor of y.
inline DiffPoly riccati_by_expansion(const BaseDiffField& base, const std::vector<KtElement>& coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<std::string> names = {"y"};
  for (int j = 0; j <= n; ++j) names.push_back("u" + std::string(static_cast<std::size_t>(j), '\''));
  RingHandle ring = make_ring(base, names);
  // D on this ring: y -> u*y, u^(j) -> u^(j+1), coefficients by delta.
  auto derive = [&](const DiffPoly& p) {
    DiffPoly out = coeff_derivation(p);
    out += partial_derivative(p, 0) * DiffPoly::variable(ring, 1) * DiffPoly::variable(ring, 0);
    for (int j = 0; j < n; ++j)
      out += partial_derivative(p, static_cast<std::size_t>(j) + 1) * DiffPoly::variable(ring, static_cast<std::size_t>(j) + 2);
    return out;
  };
  DiffPoly yk = DiffPoly::variable(ring, 0);
  DiffPoly total(ring);
  for (int k = 0; k <= n; ++k) {
    total += yk.scaled(coeffs[static_cast<std::size_t>(k)]);
    if (k < n) yk = derive(yk);
  }
  // total = R * y; strip the y.
  RingHandle uring = indeterminate_ring(base, n - 1);
  DiffPoly r(uring);
  for (const auto& [e, c] : total.terms()) {
    if (e[0] != 1 || e.back() != 0) throw std::logic_error("unexpected term in the expansion");
    Exponents ue(e.begin() + 1, e.end() - 1);
    r += DiffPoly::monomial(uring, ue, c);
  }
  return r;
}

/// Every expression obtained from e by one sign change at a single node.
/// Bases of even powers are not negated.
inline std::vector<Expr> sign_mutations(const Expr& e, bool negate = true) {
  std::vector<Expr> out;
  if (negate) out.push_back(Expr::neg(e));
  if (e.kind == Expr::Kind::Add || e.kind == Expr::Kind::Sub) {
    Expr flipped = e;
    flipped.kind = e.kind == Expr::Kind::Add ? Expr::Kind::Sub : Expr::Kind::Add;
    out.push_back(flipped);
  }
  if (e.kind == Expr::Kind::Neg) out.push_back(e.args[0]);
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    const bool even_base = e.kind == Expr::Kind::Pow && e.exponent % 2 == 0;
    for (auto& sub : sign_mutations(e.args[i], !even_base)) {
      Expr m = e;
      m.args[i] = std::move(sub);
      out.push_back(std::move(m));
    }
  }
  return out;
}

/// The script with one sign changed, for every possible change in its rules
/// and in its defining equation.
inline std::vector<ChainScript> sign_corruptions(const ChainScript& s) {
  std::vector<ChainScript> out;
  for (std::size_t i = 0; i < s.rules.size(); ++i)
    for (auto& m : sign_mutations(s.rules[i].second)) {
      ChainScript c = s;
      c.rules[i].second = std::move(m);
      out.push_back(std::move(c));
    }
  if (s.defining)
    for (auto& m : sign_mutations(s.defining->rhs)) {
      ChainScript c = s;
      c.defining->rhs = std::move(m);
      out.push_back(std::move(c));
    }
  return out;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(PFAFFKIT_FIXTURES) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace testkit
