#include "pfaffkit/chains.hpp"

#include <algorithm>

namespace pfaffkit {

PfaffianChain::PfaffianChain(RingHandle ring, ChainKind kind, std::vector<DiffRatFunc> rules)
    : ring_(std::move(ring)), kind_(kind), rules_(std::move(rules)) {
  if (rules_.size() != ring_->vars.size())
    fail(ErrorCode::ArityMismatch, "a chain needs one rule per variable");
  for (const auto& r : rules_)
    if (!same_ring(r.ring(), ring_)) fail(ErrorCode::RingMismatch, "rule outside the chain's ring");
}

bool operator==(const PfaffianChain& a, const PfaffianChain& b) {
  if (a.kind_ != b.kind_ || !same_ring(a.ring_, b.ring_) || a.rules_.size() != b.rules_.size()) return false;
  for (std::size_t i = 0; i < a.rules_.size(); ++i)
    if (!(a.rules_[i] == b.rules_[i])) return false;
  return true;
}

void chain_validate(const PfaffianChain& chain) {
  const auto& rules = chain.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = i + 1; j < rules.size(); ++j)
      if (rules[i].num().mentions(j) || rules[i].den().mentions(j)) throw TriangularityError(i + 1, j + 1);
    if (chain.kind() == ChainKind::Polynomial && !rules[i].is_polynomial())
      fail(ErrorCode::MixedKinds, "rule " + std::to_string(i + 1) + " is rational in a polynomial chain");
  }
}

ChainElement make_element(ChainHandle chain, DiffRatFunc expr) {
  if (!same_ring(chain->ring(), expr.ring())) fail(ErrorCode::ChainMismatch, "element outside the chain's ring");
  return {std::move(chain), std::move(expr)};
}

namespace {

bool same_chain(const ChainHandle& a, const ChainHandle& b) { return a == b || *a == *b; }

}  // namespace

ChainElement combine(const ChainElement& a, const ChainElement& b, CombineOp op) {
  if (!same_chain(a.chain, b.chain)) fail(ErrorCode::ChainMismatch, "elements of different chains");
  return {a.chain, op == CombineOp::Add ? a.expr + b.expr : a.expr * b.expr};
}

namespace {

DiffRatFunc derive_polynomial(const DiffPoly& p, std::span<const DiffRatFunc> rules) {
  DiffRatFunc acc(coeff_derivation(p));
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (!p.mentions(i)) continue;
    acc = acc + DiffRatFunc(partial_derivative(p, i)) * rules[i];
  }
  return acc;
}

}  // namespace

DiffRatFunc derive_along(const DiffRatFunc& e, std::span<const DiffRatFunc> rules) {
  if (rules.size() != e.ring()->vars.size()) fail(ErrorCode::ArityMismatch, "one rule per variable expected");
  DiffRatFunc dn = derive_polynomial(e.num(), rules);
  if (e.is_polynomial()) return dn;
  DiffRatFunc dd = derive_polynomial(e.den(), rules);
  const DiffPoly& n = e.num();
  const DiffPoly& d = e.den();
  // (dn d - n dd) / d^2 over one common denominator, reduced once.
  return DiffRatFunc(dn.num() * dd.den() * d - n * dd.num() * dn.den(), dn.den() * dd.den() * d * d);
}

ChainElement total_derivative(const ChainElement& e) {
  if (e.chain->kind() != ChainKind::Polynomial || !e.expr.is_polynomial())
    fail(ErrorCode::NotPolynomialKind, "total_derivative needs a polynomial chain and element");
  return {e.chain, derive_along(e.expr, e.chain->rules())};
}

ChainElement invert_element(const ChainElement& e) {
  if (e.chain->kind() != ChainKind::Polynomial || !e.expr.is_polynomial())
    fail(ErrorCode::NotPolynomialKind, "invert_element needs a polynomial chain and element");
  if (e.expr.is_zero()) fail(ErrorCode::ZeroElement, "cannot invert zero");
  const RingHandle& ring = e.chain->ring();
  std::vector<std::string> vars = ring->vars;
  std::string fresh;
  for (std::size_t k = vars.size() + 1;; ++k) {
    fresh = "y" + std::to_string(k);
    if (!ring->index_of(fresh) && ring->base.tvar() != fresh) break;
  }
  vars.push_back(fresh);
  RingHandle ext = make_ring(ring->base, vars);
  std::vector<DiffRatFunc> rules;
  for (const auto& r : e.chain->rules()) rules.push_back(r.embed(ext));
  DiffPoly de = derive_along(e.expr, e.chain->rules()).as_polynomial().embed(ext);
  DiffPoly z = DiffPoly::variable(ext, vars.size() - 1);
  rules.emplace_back(-(z * z * de));
  auto chain = std::make_shared<const PfaffianChain>(ext, ChainKind::Polynomial, std::move(rules));
  return {chain, DiffRatFunc(z)};
}

NoetherianSystem rational_to_noetherian(const DiffPoly& p, const DiffPoly& q, const std::string& yname,
                                        const std::string& wname) {
  if (q.is_zero()) fail(ErrorCode::ZeroDenominator, "Q must be nonzero");
  if (p.nvars() != 1 || !same_ring(p.ring(), q.ring()))
    fail(ErrorCode::InvalidInput, "P and Q must share a one-variable ring");
  RingHandle ring = make_ring(p.ring()->base, {yname, wname});
  const DiffRatFunc y(DiffPoly::variable(ring, 0));
  const DiffPoly w = DiffPoly::variable(ring, 1);
  auto at_y = [&](const DiffPoly& poly) { return substitute(DiffRatFunc(poly), y).as_polynomial(); };
  const DiffPoly py = at_y(p);
  const DiffPoly dq = at_y(partial_derivative(q, 0));
  const DiffPoly qdelta = at_y(coeff_derivation(q));
  NoetherianSystem sys{ring, {}};
  sys.rules.push_back(w * py);
  sys.rules.push_back(-(w.pow(3) * py * dq) - w.pow(2) * qdelta);
  return sys;
}

VerifyResult verify_forward(const PfaffianChain& chain, const DiffRatFunc& element, const DiffRatFunc& f) {
  if (!same_ring(chain.ring(), element.ring())) fail(ErrorCode::ChainMismatch, "element outside the chain's ring");
  DiffRatFunc lhs = derive_along(element, chain.rules());
  DiffRatFunc rhs = substitute(f, element);
  if (lhs == rhs) return {true, 0, std::nullopt};
  return {false, 0, lhs - rhs};
}

VerifyResult verify_backward(const DiffRatFunc& g, std::span<const DiffRatFunc> assignments,
                             std::span<const DiffRatFunc> rules) {
  if (assignments.size() != rules.size())
    fail(ErrorCode::ArityMismatch, std::to_string(rules.size()) + " rules but " +
                                       std::to_string(assignments.size()) + " assignments");
  if (g.ring()->vars.size() != 1) fail(ErrorCode::InvalidInput, "defining equation must be univariate");
  for (const auto& h : assignments)
    if (!same_ring(h.ring(), g.ring())) fail(ErrorCode::RingMismatch, "assignment outside the defining ring");
  const std::span<const DiffRatFunc> defining(&g, 1);
  for (std::size_t i = 0; i < rules.size(); ++i) {
    DiffRatFunc lhs = derive_along(assignments[i], defining);
    DiffRatFunc rhs = evaluate(rules[i], assignments);
    if (!(lhs == rhs)) return {false, i + 1, lhs - rhs};
  }
  return {true, 0, std::nullopt};
}

VerifyResult verify_backward(const DiffRatFunc& g, std::span<const DiffRatFunc> assignments,
                             const PfaffianChain& chain) {
  return verify_backward(g, assignments, std::span<const DiffRatFunc>(chain.rules()));
}

VerifyResult verify_backward(const DiffRatFunc& g, std::span<const DiffRatFunc> assignments,
                             const NoetherianSystem& system) {
  std::vector<DiffRatFunc> rules;
  for (const auto& r : system.rules) rules.emplace_back(r);
  return verify_backward(g, assignments, std::span<const DiffRatFunc>(rules));
}

UniPoly to_unipoly(const DiffPoly& p) {
  if (!p.ring()->base.is_constant()) fail(ErrorCode::NonConstantBase, "coefficients must be constants");
  Poly<KtElement> u = to_univariate(p);
  std::vector<AlgebraicScalar> c;
  for (const auto& k : u.coefficients()) c.push_back(k.constant_value());
  return UniPoly(std::move(c));
}

DiffPoly from_unipoly(const RingHandle& ring, const UniPoly& p) {
  std::vector<KtElement> c;
  for (const auto& a : p.coefficients()) c.emplace_back(a);
  return from_univariate(ring, Poly<KtElement>(std::move(c)));
}

namespace {

UniPoly homogenize(const UniPoly& f, const UniPoly& r, const UniPoly& s) {
  UniPoly acc;
  const int d = f.degree();
  for (int k = 0; k <= d; ++k) {
    const AlgebraicScalar& c = f.coeff(static_cast<std::size_t>(k));
    if (c.is_zero()) continue;
    acc += (r.pow(static_cast<unsigned>(k)) * s.pow(static_cast<unsigned>(d - k))).scaled(c);
  }
  return acc;
}

UniPoly linear(const AlgebraicScalar& root) { return UniPoly({-root, AlgebraicScalar(1L)}); }

}  // namespace

std::vector<PresentationCandidate> presentation_catalog(const UniPoly& num, const UniPoly& den) {
  std::vector<AlgebraicScalar> points{AlgebraicScalar(0L), AlgebraicScalar(1L)};
  for (const UniPoly* p : {&num, &den}) {
    if (p->is_zero() || p->degree() < 1) continue;
    if (auto roots = split_linear(*p)) {
      for (const auto& f : *roots)
        if (std::find(points.begin(), points.end(), f.root) == points.end()) points.push_back(f.root);
    }
  }
  const UniPoly one = UniPoly::constant(AlgebraicScalar(1L));
  const UniPoly x = UniPoly::x();
  std::vector<PresentationCandidate> out;
  auto push = [&](UniPoly r, UniPoly s) {
    const AlgebraicScalar lead = s.leading();
    r = r.scaled(lead.inverse());
    s = s.monic();
    for (const auto& c : out)
      if (c.num == r && c.den == s) return;
    out.push_back({std::move(r), std::move(s)});
  };
  push(x, one);
  push(one, x);
  for (const auto& c : points) {
    push(linear(-c), one);
    push(linear(c), one);
    push(one, linear(c));
  }
  for (const auto& c : points)
    for (const auto& d : points)
      if (!(c == d)) push(linear(c), linear(d));
  push(x * x, one);
  push(one, x * x);
  return out;
}

std::optional<PresentationCertificate> try_presentation(const DiffRatFunc& f, const PresentationCandidate& h,
                                                        int degree_bound) {
  if (!f.ring()->base.is_constant()) fail(ErrorCode::NonConstantBase, "presentation search needs a constant base");
  if (f.ring()->vars.size() != 1) fail(ErrorCode::InvalidInput, "f must be univariate");
  const UniPoly& r = h.num;
  const UniPoly& s = h.den;
  if (s.is_zero()) return std::nullopt;
  if (r.degree() > degree_bound || s.degree() > degree_bound) return std::nullopt;
  if (!r.is_zero() && !gcd(r, s).is_constant()) return std::nullopt;
  const UniPoly w = r.derivative() * s - r * s.derivative();
  if (w.is_zero()) return std::nullopt;  // h constant
  const UniPoly fn = to_unipoly(f.num());
  const UniPoly fd = to_unipoly(f.den());
  UniPoly num = homogenize(fn, r, s);
  UniPoly den = homogenize(fd, r, s);
  if (den.is_zero()) return std::nullopt;
  const int shift = fd.degree() - fn.degree() + 2;
  if (shift >= 0) {
    num = num * s.pow(static_cast<unsigned>(shift));
  } else {
    den = den * s.pow(static_cast<unsigned>(-shift));
  }
  UniPoly p;
  if (!divides(den * w, num, &p)) return std::nullopt;

  RingHandle ring = make_ring(f.ring()->base, {"b"});
  auto chain = std::make_shared<const PfaffianChain>(
      ring, ChainKind::Polynomial, std::vector<DiffRatFunc>{DiffRatFunc(from_unipoly(ring, p))});
  DiffRatFunc element(from_unipoly(ring, r), from_unipoly(ring, s));
  if (!verify_forward(*chain, element, f).pass)
    fail(ErrorCode::InternalInvariant, "presentation certificate failed forward verification");
  return PresentationCertificate{r, s, p, chain, element};
}

std::optional<PresentationCertificate> search_presentation(const DiffRatFunc& f,
                                                           std::span<const PresentationCandidate> extra,
                                                           int degree_bound, bool use_catalog) {
  if (!f.ring()->base.is_constant()) fail(ErrorCode::NonConstantBase, "presentation search needs a constant base");
  if (degree_bound < 1) fail(ErrorCode::InvalidInput, "degree bound must be >= 1");
  std::vector<PresentationCandidate> candidates;
  if (use_catalog) candidates = presentation_catalog(to_unipoly(f.num()), to_unipoly(f.den()));
  candidates.insert(candidates.end(), extra.begin(), extra.end());
  for (const auto& h : candidates)
    if (auto cert = try_presentation(f, h, degree_bound)) return cert;
  return std::nullopt;
}

}  // namespace pfaffkit
