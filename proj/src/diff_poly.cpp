#include "pfaffkit/diff_poly.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <sstream>

namespace pfaffkit {

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return i;
  return std::nullopt;
}

RingHandle make_ring(BaseDiffField base, std::vector<std::string> vars) {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (base.tvar() && vars[i] == *base.tvar())
      fail(ErrorCode::InvalidInput, "variable " + vars[i] + " clashes with the independent variable");
    for (std::size_t j = 0; j < i; ++j)
      if (vars[i] == vars[j]) fail(ErrorCode::InvalidInput, "duplicate variable " + vars[i]);
  }
  return std::make_shared<const PolyRing>(PolyRing{std::move(base), std::move(vars)});
}

bool same_ring(const RingHandle& a, const RingHandle& b) {
  return a == b || (a->base == b->base && a->vars == b->vars);
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

DiffPoly::DiffPoly(RingHandle ring) : ring_(std::move(ring)) {}

DiffPoly DiffPoly::constant(RingHandle ring, const KtElement& c) {
  ring->base.check_member(c);
  DiffPoly p(ring);
  p.add_term(Exponents(ring->vars.size(), 0), c);
  return p;
}

DiffPoly DiffPoly::variable(RingHandle ring, std::size_t index) {
  if (index >= ring->vars.size()) fail(ErrorCode::UnknownVariable, "variable index out of range");
  Exponents e(ring->vars.size(), 0);
  e[index] = 1;
  DiffPoly p(ring);
  p.add_term(e, KtElement(1L));
  return p;
}

DiffPoly DiffPoly::variable(RingHandle ring, const std::string& name) {
  auto i = ring->index_of(name);
  if (!i) fail(ErrorCode::UnknownVariable, name);
  return variable(std::move(ring), *i);
}

DiffPoly DiffPoly::monomial(RingHandle ring, Exponents e, const KtElement& c) {
  if (e.size() != ring->vars.size()) fail(ErrorCode::InvalidInput, "exponent vector length mismatch");
  ring->base.check_member(c);
  DiffPoly p(ring);
  p.add_term(e, c);
  return p;
}

void DiffPoly::add_term(const Exponents& e, const KtElement& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void DiffPoly::check_same_ring(const DiffPoly& o) const {
  if (!same_ring(ring_, o.ring_)) fail(ErrorCode::RingMismatch, "operands live in different rings");
}

bool DiffPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

KtElement DiffPoly::constant_term() const {
  auto it = terms_.find(Exponents(nvars(), 0));
  return it == terms_.end() ? KtElement() : it->second;
}

int DiffPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const Exponents& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int DiffPoly::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  check_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  check_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  a.check_same_ring(b);
  DiffPoly r(a.ring_);
  Exponents e(a.nvars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

DiffPoly DiffPoly::scaled(const KtElement& c) const {
  ring_->base.check_member(c);
  DiffPoly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

DiffPoly DiffPoly::pow(unsigned e) const {
  DiffPoly result = constant(ring_, KtElement(1L));
  DiffPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const DiffPoly& a, const DiffPoly& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

DiffPoly DiffPoly::embed(const RingHandle& target) const {
  if (same_ring(ring_, target)) return *this;
  if (!(ring_->base == target->base)) fail(ErrorCode::RingMismatch, "cannot embed across base fields");
  std::vector<std::size_t> map;
  for (std::size_t i = 0; i < nvars(); ++i) {
    auto j = target->index_of(ring_->vars[i]);
    if (!j) {
      if (degree_in(i) > 0) fail(ErrorCode::UnknownVariable, ring_->vars[i] + " missing in target ring");
      map.push_back(target->vars.size());
    } else {
      map.push_back(*j);
    }
  }
  DiffPoly r(target);
  for (const auto& [e, c] : terms_) {
    Exponents te(target->vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) te[map[i]] = e[i];
    r.add_term(te, c);
  }
  return r;
}

DiffPoly coeff_derivation(const DiffPoly& p) {
  DiffPoly r(p.ring());
  if (p.ring()->base.is_constant()) return r;
  for (const auto& [e, c] : p.terms()) r += DiffPoly::monomial(p.ring(), e, p.ring()->base.derive(c));
  return r;
}

DiffPoly partial_derivative(const DiffPoly& p, std::size_t var) {
  if (var >= p.nvars()) fail(ErrorCode::UnknownVariable, "variable index out of range");
  DiffPoly r(p.ring());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    r += DiffPoly::monomial(p.ring(), d, c * KtElement(static_cast<long>(e[var])));
  }
  return r;
}

DiffPoly partial_derivative(const DiffPoly& p, const std::string& var) {
  auto i = p.ring()->index_of(var);
  if (!i) fail(ErrorCode::UnknownVariable, var);
  return partial_derivative(p, *i);
}

Poly<KtElement> to_univariate(const DiffPoly& p) {
  if (p.nvars() != 1) fail(ErrorCode::InvalidInput, "univariate view needs a one-variable ring");
  std::vector<KtElement> c(static_cast<std::size_t>(std::max(p.degree_in(0) + 1, 0)));
  for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e[0])] = v;
  return Poly<KtElement>(std::move(c));
}

DiffPoly from_univariate(const RingHandle& ring, const Poly<KtElement>& p) {
  if (ring->vars.size() != 1) fail(ErrorCode::InvalidInput, "univariate view needs a one-variable ring");
  DiffPoly r(ring);
  for (std::size_t i = 0; i < p.coefficients().size(); ++i)
    if (!p.coefficients()[i].is_zero()) r += DiffPoly::monomial(ring, {static_cast<int>(i)}, p.coefficients()[i]);
  return r;
}

namespace {

bool single_group(const std::string& s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && i + 1 < s.size()) return false;
  }
  return true;
}

// y, y1', t^2, 12
bool power_atom(const std::string& s) {
  static const std::regex re(R"(([A-Za-z_][A-Za-z0-9_]*'*|[0-9]+)(\^[0-9]+)?)");
  return std::regex_match(s, re);
}

std::string monomial_text(const PolyRing& ring, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.vars[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const DiffPoly& p) {
  if (p.is_zero()) return "0";
  const std::string tvar = p.ring()->base.tvar().value_or("t");
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const std::string mono = monomial_text(*p.ring(), it->first);
    const KtElement& c = it->second;
    std::optional<Rational> q;
    if (c.is_constant()) q = is_rational(c.constant_value());
    if (q) {
      const bool neg = *q < 0;
      const Rational mag = neg ? Rational(-*q) : *q;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      if (mono.empty()) {
        os << to_string(mag);
      } else if (mag == 1) {
        os << mono;
      } else {
        os << to_string(mag) << "*" << mono;
      }
    } else {
      const bool neg = to_string(c, tvar).front() == '-';
      const KtElement mag = neg ? -c : c;
      std::string text = to_string(mag, tvar);
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      if (!is_atomic_text(mag) && !single_group(text)) text = "(" + text + ")";
      os << text;
      if (!mono.empty()) os << "*" << mono;
    }
    first = false;
  }
  return os.str();
}

DiffRatFunc::DiffRatFunc(DiffPoly num) : num_(std::move(num)), den_(DiffPoly::constant(num_.ring(), KtElement(1L))) {}

DiffRatFunc::DiffRatFunc(DiffPoly num, DiffPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (!same_ring(num_.ring(), den_.ring())) fail(ErrorCode::RingMismatch, "numerator and denominator rings differ");
  normalize();
}

void DiffRatFunc::normalize() {
  if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "zero denominator");
  const RingHandle& ring = num_.ring();
  if (num_.is_zero()) {
    den_ = DiffPoly::constant(ring, KtElement(1L));
    return;
  }
  if (den_.is_constant()) {
    const KtElement inv = den_.constant_term().inverse();
    if (!(inv == KtElement(1L))) num_ = num_.scaled(inv);
    den_ = DiffPoly::constant(ring, KtElement(1L));
    return;
  }
  if (ring->vars.size() == 1) {
    Poly<KtElement> n = to_univariate(num_), d = to_univariate(den_);
    Poly<KtElement> g = gcd_over_kt(n, d);
    if (!g.is_constant()) {
      n = n.divmod(g).first;
      d = d.divmod(g).first;
    }
    const KtElement inv = d.leading().inverse();
    num_ = from_univariate(ring, n.scaled(inv));
    den_ = from_univariate(ring, d.scaled(inv));
    return;
  }
  Exponents common;
  for (const auto* p : {&num_, &den_}) {
    for (const auto& [e, c] : p->terms()) {
      if (common.empty()) {
        common = e;
      } else {
        for (std::size_t i = 0; i < e.size(); ++i) common[i] = std::min(common[i], e[i]);
      }
    }
  }
  if (std::any_of(common.begin(), common.end(), [](int v) { return v > 0; })) {
    auto strip = [&](const DiffPoly& p) {
      DiffPoly r(ring);
      for (const auto& [e, c] : p.terms()) {
        Exponents d = e;
        for (std::size_t i = 0; i < d.size(); ++i) d[i] -= common[i];
        r += DiffPoly::monomial(ring, d, c);
      }
      return r;
    };
    num_ = strip(num_);
    den_ = strip(den_);
  }
  const KtElement inv = den_.leading_term().second.inverse();
  num_ = num_.scaled(inv);
  den_ = den_.scaled(inv);
}

DiffPoly DiffRatFunc::as_polynomial() const {
  if (!is_polynomial()) fail(ErrorCode::InvalidInput, "not a polynomial");
  return num_;
}

DiffRatFunc DiffRatFunc::operator-() const {
  DiffRatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

DiffRatFunc operator+(const DiffRatFunc& a, const DiffRatFunc& b) {
  if (a.den_ == b.den_) return DiffRatFunc(a.num_ + b.num_, a.den_);
  return DiffRatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

DiffRatFunc operator-(const DiffRatFunc& a, const DiffRatFunc& b) { return a + (-b); }

DiffRatFunc operator*(const DiffRatFunc& a, const DiffRatFunc& b) {
  return DiffRatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

DiffRatFunc DiffRatFunc::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  return DiffRatFunc(den_, num_);
}

DiffRatFunc operator/(const DiffRatFunc& a, const DiffRatFunc& b) { return a * b.inverse(); }

DiffRatFunc DiffRatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  return DiffRatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

bool operator==(const DiffRatFunc& a, const DiffRatFunc& b) {
  if (!same_ring(a.ring(), b.ring())) return false;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

DiffRatFunc DiffRatFunc::embed(const RingHandle& target) const {
  return DiffRatFunc(num_.embed(target), den_.embed(target));
}

namespace {

// Sum over terms of c * prod A_i^e_i * B_i^(E_i - e_i): the polynomial p
// evaluated at A_i/B_i, multiplied through by prod B_i^E_i.
DiffPoly homogenized(const DiffPoly& p, const std::vector<DiffPoly>& nums, const std::vector<DiffPoly>& dens,
                     const std::vector<int>& top, const RingHandle& target,
                     std::vector<std::vector<DiffPoly>>& num_pows, std::vector<std::vector<DiffPoly>>& den_pows) {
  auto power = [&](std::vector<std::vector<DiffPoly>>& cache, const DiffPoly& base, std::size_t i, int k) -> const DiffPoly& {
    auto& row = cache[i];
    if (row.empty()) row.push_back(DiffPoly::constant(target, KtElement(1L)));
    while (static_cast<int>(row.size()) <= k) row.push_back(row.back() * base);
    return row[static_cast<std::size_t>(k)];
  };
  DiffPoly acc(target);
  for (const auto& [e, c] : p.terms()) {
    DiffPoly term = DiffPoly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term = term * power(num_pows, nums[i], i, e[i]);
      if (top[i] - e[i] > 0 && !dens[i].is_constant()) term = term * power(den_pows, dens[i], i, top[i] - e[i]);
      else if (top[i] - e[i] > 0) term = term.scaled(dens[i].constant_term().pow(top[i] - e[i]));
    }
    acc += term;
  }
  return acc;
}

}  // namespace

DiffRatFunc evaluate(const DiffRatFunc& f, std::span<const DiffRatFunc> values) {
  if (values.size() != f.ring()->vars.size())
    fail(ErrorCode::ArityMismatch, "expected " + std::to_string(f.ring()->vars.size()) + " values");
  if (values.empty()) fail(ErrorCode::InvalidInput, "evaluate needs a target ring");
  const RingHandle& target = values.front().ring();
  for (const auto& v : values)
    if (!same_ring(v.ring(), target)) fail(ErrorCode::RingMismatch, "values live in different rings");
  if (!(f.ring()->base == target->base)) fail(ErrorCode::RingMismatch, "base fields differ");
  std::vector<DiffPoly> nums, dens;
  std::vector<int> top;
  for (std::size_t i = 0; i < values.size(); ++i) {
    nums.push_back(values[i].num());
    dens.push_back(values[i].den());
    top.push_back(std::max(f.num().degree_in(i), f.den().degree_in(i)));
  }
  std::vector<std::vector<DiffPoly>> num_pows(values.size()), den_pows(values.size());
  DiffPoly n = homogenized(f.num(), nums, dens, top, target, num_pows, den_pows);
  DiffPoly d = homogenized(f.den(), nums, dens, top, target, num_pows, den_pows);
  if (d.is_zero()) fail(ErrorCode::DenominatorVanishesIdentically, "denominator vanishes after substitution");
  return DiffRatFunc(std::move(n), std::move(d));
}

DiffRatFunc substitute(const DiffRatFunc& f, const DiffRatFunc& h) {
  if (f.ring()->vars.size() != 1) fail(ErrorCode::InvalidInput, "substitute needs a univariate f");
  return evaluate(f, std::span<const DiffRatFunc>(&h, 1));
}

DiffRatFunc substitute_cleared(const DiffRatFunc& f, const DiffRatFunc& h, unsigned power) {
  return substitute(f, h) * DiffRatFunc(h.den().pow(power));
}

std::string to_string(const DiffRatFunc& f) {
  std::string n = to_string(f.num());
  if (f.is_polynomial()) return n;
  std::string d = to_string(f.den());
  if (f.num().terms().size() > 1 || n.find('/') != std::string::npos) n = "(" + n + ")";
  if (!single_group(d) && !power_atom(d)) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace pfaffkit
