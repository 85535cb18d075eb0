#include "pfaffkit/criteria.hpp"

#include <algorithm>
#include <sstream>

namespace pfaffkit {

int FactoredRatFunc::zero_count() const {
  int n = 0;
  for (const auto& z : zeros) n += z.multiplicity;
  return n;
}

int FactoredRatFunc::pole_count() const {
  int m = 0;
  for (const auto& p : poles) m += p.multiplicity;
  return m;
}

namespace {

std::vector<LinearFactor> merged(std::vector<LinearFactor> in) {
  std::vector<LinearFactor> out;
  for (auto& f : in) {
    if (f.multiplicity < 1) fail(ErrorCode::InvalidInput, "multiplicity must be >= 1");
    auto it = std::find_if(out.begin(), out.end(), [&](const LinearFactor& g) { return g.root == f.root; });
    if (it == out.end()) {
      out.push_back(std::move(f));
    } else {
      it->multiplicity += f.multiplicity;
    }
  }
  return out;
}

UniPoly product_of(const std::vector<LinearFactor>& roots) {
  UniPoly acc = UniPoly::constant(AlgebraicScalar(1L));
  for (const auto& f : roots)
    acc = acc * UniPoly({-f.root, AlgebraicScalar(1L)}).pow(static_cast<unsigned>(f.multiplicity));
  return acc;
}

}  // namespace

FactoredRatFunc make_factored(AlgebraicScalar leading, std::vector<LinearFactor> zeros,
                              std::vector<LinearFactor> poles) {
  if (leading.is_zero()) fail(ErrorCode::InvalidInput, "leading coefficient must be nonzero");
  FactoredRatFunc f{std::move(leading), merged(std::move(zeros)), merged(std::move(poles))};
  for (auto& z : f.zeros) {
    for (auto& p : f.poles) {
      if (!(z.root == p.root)) continue;
      const int k = std::min(z.multiplicity, p.multiplicity);
      z.multiplicity -= k;
      p.multiplicity -= k;
    }
  }
  auto drop = [](std::vector<LinearFactor>& v) {
    v.erase(std::remove_if(v.begin(), v.end(), [](const LinearFactor& x) { return x.multiplicity == 0; }), v.end());
  };
  drop(f.zeros);
  drop(f.poles);
  return f;
}

UniPoly zeros_poly(const FactoredRatFunc& f) { return product_of(f.zeros); }
UniPoly poles_poly(const FactoredRatFunc& f) { return product_of(f.poles); }

DiffRatFunc to_diff_ratfunc(const FactoredRatFunc& f, const RingHandle& ring) {
  return DiffRatFunc(from_unipoly(ring, zeros_poly(f).scaled(f.leading)), from_unipoly(ring, poles_poly(f)));
}

std::optional<FactoredRatFunc> factor_ratfunc(const DiffRatFunc& f) {
  if (!f.ring()->base.is_constant() || f.ring()->vars.size() != 1) return std::nullopt;
  if (f.is_zero()) return std::nullopt;
  const UniPoly n = to_unipoly(f.num());
  const UniPoly d = to_unipoly(f.den());
  auto zeros = split_linear(n);
  auto poles = split_linear(d);
  if (!zeros || !poles) return std::nullopt;
  return make_factored(n.leading() / d.leading(), std::move(*zeros), std::move(*poles));
}

std::string to_string(const FactoredRatFunc& f, const std::string& var) {
  auto factors = [&](const std::vector<LinearFactor>& v) {
    std::string s;
    for (const auto& z : v) {
      if (!s.empty()) s += "*";
      const std::optional<Rational> q = is_rational(z.root);
      if (z.root.is_zero()) {
        s += var;
      } else if (q && *q < 0) {
        s += "(" + var + " + " + to_string(Rational(-*q)) + ")";
      } else {
        s += "(" + var + " - " + to_string(z.root) + ")";
      }
      if (z.multiplicity > 1) s += "^" + std::to_string(z.multiplicity);
    }
    return s;
  };
  std::string out = to_string(f.leading);
  if (!f.zeros.empty()) {
    if (f.leading == AlgebraicScalar(1L)) {
      out = factors(f.zeros);
    } else if (f.leading == AlgebraicScalar(-1L)) {
      out = "-" + factors(f.zeros);
    } else {
      out += "*" + factors(f.zeros);
    }
  }
  const std::optional<Rational> c = is_rational(f.leading);
  if (f.zeros.empty() && !f.poles.empty() && c && c->get_den() != 1) out = "(" + out + ")";
  if (f.poles.size() == 1) {
    out += "/" + factors(f.poles);
  } else if (!f.poles.empty()) {
    out += "/(" + factors(f.poles) + ")";
  }
  return out;
}

ResidueData residues_of_inverse(const FactoredRatFunc& f, bool allow_multiple) {
  ResidueData out;
  for (std::size_t k = 0; k < f.zeros.size(); ++k) {
    const LinearFactor& z = f.zeros[k];
    ResiduePoint pt{z.root, z.multiplicity, std::nullopt};
    if (z.multiplicity > 1) {
      if (!allow_multiple) fail(ErrorCode::ZeroDenominatorData, "repeated zero " + to_string(z.root));
      out.complete = false;
      out.finite.push_back(pt);
      continue;
    }
    AlgebraicScalar num(1L), den = f.leading;
    for (const auto& p : f.poles) num = num * (z.root - p.root).pow(p.multiplicity);
    for (std::size_t i = 0; i < f.zeros.size(); ++i)
      if (i != k) den = den * (z.root - f.zeros[i].root).pow(f.zeros[i].multiplicity);
    pt.residue = num / den;
    out.finite.push_back(pt);
  }
  const UniPoly a = zeros_poly(f);
  const UniPoly b = poles_poly(f);
  const int n = a.degree();
  if (n >= 1) {
    const UniPoly r = b.divmod(a).second;
    out.at_infinity = -(r.coeff(static_cast<std::size_t>(n - 1)) / f.leading);
  }
  return out;
}

Finding strict_disintegration_test(const FactoredRatFunc& f) {
  ResidueData data = residues_of_inverse(f);
  std::vector<AlgebraicScalar> res;
  for (const auto& p : data.finite)
    if (p.residue) res.push_back(*p.residue);
  if (res.size() < 2) return {Truth::Unknown, "dx/f has fewer than two simple poles"};
  for (std::size_t i = 0; i < res.size(); ++i) {
    for (std::size_t j = i + 1; j < res.size(); ++j) {
      if (auto q = rational_multiple(res[i], res[j]))
        return {Truth::Unknown, "residues " + to_string(res[i]) + " and " + to_string(res[j]) +
                                    " differ by the rational factor " + to_string(*q)};
    }
  }
  return {Truth::Yes, "dx/f has " + std::to_string(res.size()) +
                          " simple poles and no two residues are rational multiples of each other"};
}

bool degree_criterion(const FactoredRatFunc& f) {
  const int n = f.zero_count();
  const int m = f.pole_count();
  return f.poles.size() >= 2 || (0 < m && m < n - 2);
}

Finding not_pfaffian_by_degree_theorem(const FactoredRatFunc& f) {
  if (!degree_criterion(f))
    return {Truth::Unknown, "degree criterion fails: fewer than two distinct poles and not 0 < m < n - 2"};
  Finding dis = strict_disintegration_test(f);
  if (dis.truth != Truth::Yes) return {Truth::Unknown, "strict disintegration not certified: " + dis.reason};
  std::string branch = f.poles.size() >= 2 ? "two distinct poles" : "0 < m < n - 2";
  return {Truth::No, "degree criterion (" + branch + ") with strict disintegration: " + dis.reason};
}

Verdict weierstrass_check(const AlgebraicScalar& g2, const AlgebraicScalar& g3) {
  const AlgebraicScalar disc = AlgebraicScalar(27L) * g3 * g3 - g2 * g2 * g2;
  if (disc.is_zero()) fail(ErrorCode::DegenerateCurve, "27 g3^2 - g2^3 = 0");
  const GroupExpr e = GroupExpr::atom(AtomKind::Elliptic);
  const GroupVerdict eul = check_series(e, AllowedSet::eulerian());
  const GroupVerdict one = check_series(e, AllowedSet::one_reducible_internal());
  if (eul.truth != Truth::No) fail(ErrorCode::InternalInvariant, "elliptic group judged eulerian");
  Verdict v;
  v.pfaffian = Truth::No;
  // The type is internal to the constants, where both notions agree.
  v.rationally_pfaffian = Truth::No;
  v.criterion = "elliptic binding group";
  v.reason = "binding group elliptic: " + eul.reason;
  v.one_reducible = one.truth;
  v.notes.push_back("27*g3^2 - g2^3 = " + to_string(disc));
  return v;
}

Verdict classify_order_one(const DiffRatFunc& f, const ClassifyOptions& options) {
  if (f.ring()->vars.size() != 1) fail(ErrorCode::InvalidInput, "order-one classification needs y' = f(y)");
  Verdict v;
  const RingHandle& ring = f.ring();
  const std::string& yname = ring->vars[0];

  // Rationally Pfaffian: the one-rule rational chain, and the Noetherian system.
  v.rational_chain = std::make_shared<const PfaffianChain>(
      ring, f.is_polynomial() ? ChainKind::Polynomial : ChainKind::Rational, std::vector<DiffRatFunc>{f});
  v.noetherian = rational_to_noetherian(f.num(), f.den(), yname, yname == "w" ? "v" : "w");
  {
    const DiffRatFunc id(DiffPoly::variable(ring, 0));
    const std::vector<DiffRatFunc> assign{id, DiffRatFunc(DiffPoly::constant(ring, KtElement(1L)), f.den())};
    if (!verify_backward(f, assign, *v.noetherian).pass)
      fail(ErrorCode::InternalInvariant, "Noetherian certificate failed backward verification");
  }
  v.rationally_pfaffian = Truth::Yes;

  if (f.is_polynomial()) {
    v.pfaffian = Truth::Yes;
    v.criterion = "polynomial right-hand side";
    v.reason = "y' = f(y) with f polynomial is itself a Pfaffian chain of order 1";
    v.chain = v.rational_chain;
    v.element = DiffRatFunc(DiffPoly::variable(ring, 0));
    return v;
  }
  if (!ring->base.is_constant()) {
    v.pfaffian = Truth::Unknown;
    v.reason = "non-polynomial right-hand side over K(t): no criterion applies";
    return v;
  }

  std::vector<std::string> reasons;
  std::optional<FactoredRatFunc> factored = options.factored ? options.factored : factor_ratfunc(f);
  Finding theorem;
  if (factored) {
    v.factored = factored;
    v.residues = residues_of_inverse(*factored);
    theorem = not_pfaffian_by_degree_theorem(*factored);
    reasons.push_back("degree theorem: " + theorem.reason);
  } else {
    reasons.push_back("factorization into linear factors unavailable; degree theorem not applied");
  }
  auto cert = search_presentation(f, options.candidates, options.degree_bound);
  if (cert && theorem.truth == Truth::No)
    fail(ErrorCode::InternalInvariant, "degree theorem refuted an equation with a verified presentation");
  if (cert) {
    v.pfaffian = Truth::Yes;
    v.criterion = "presentation search";
    v.reason = "y = h(b) with b' = P(b) verified";
    v.certificate = cert;
    return v;
  }
  reasons.push_back("presentation search: no candidate within degree " + std::to_string(options.degree_bound));
  if (theorem.truth == Truth::No) {
    v.pfaffian = Truth::No;
    v.criterion = "degree+disintegration";
    v.reason = theorem.reason;
    return v;
  }
  v.pfaffian = Truth::Unknown;
  std::string joined;
  for (const auto& r : reasons) joined += (joined.empty() ? "" : "; ") + r;
  v.reason = joined;
  return v;
}

LinearReport classify_linear(const BaseDiffField& base, const std::vector<KtElement>& coeffs,
                             const GroupExpr& declared_group) {
  LinearReport out{riccati_reduce(base, coeffs), {}, Truth::Unknown, std::nullopt, std::nullopt, {}};
  const int order = static_cast<int>(coeffs.size()) - 1;
  out.eulerian = check_series(declared_group, AllowedSet::eulerian());
  out.pfaffian = out.eulerian.truth;
  for (int d = 1; d <= order; ++d) {
    if (d_solvable(declared_group, d).truth == Truth::Yes) {
      out.min_solvability_d = d;
      break;
    }
  }
  if (declared_group.node() == GroupExpr::Node::Atom && declared_group.atom_kind() == AtomKind::GL &&
      declared_group.size() >= 3) {
    if (declared_group.size() == order) {
      out.reducibility = reducibility_profile(declared_group.size());
    } else {
      out.notes.push_back("GL(" + std::to_string(declared_group.size()) + ") declared for an equation of order " +
                          std::to_string(order) + "; reducibility bounds need GL(n) with n = order");
    }
  }
  return out;
}

}  // namespace pfaffkit
