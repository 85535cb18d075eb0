#include "pfaffkit/chain_script.hpp"

#include <algorithm>
#include <sstream>

#include "pfaffkit/lowering.hpp"

namespace pfaffkit {

namespace {

const std::vector<std::string> kDirectives = {"over", "indep", "kind", "rule", "element", "ode", "defining", "assign"};

std::string blank_prefix(const std::string& line, std::size_t start, std::size_t len) {
  std::string out = line;
  std::fill(out.begin() + static_cast<std::ptrdiff_t>(start), out.begin() + static_cast<std::ptrdiff_t>(start + len),
            ' ');
  return out;
}

void check_no_field(const Equation& eq, int line) {
  if (eq.field) throw ParseError(line, 1, {"end of input"}, "field declarations belong on their own 'over' line");
}

std::string expect_derivative(const Equation& eq, int line) {
  if (eq.lhs.kind != Expr::Kind::Sym || eq.lhs.primes != 1)
    throw ParseError(line, eq.lhs.column, {"variable with one prime"}, "left-hand side must look like y'");
  return eq.lhs.name;
}

}  // namespace

ChainScript parse_chain_script(const std::string& text) {
  ChainScript s;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::size_t start = raw.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    std::size_t end = start;
    while (end < raw.size() && !std::isspace(static_cast<unsigned char>(raw[end]))) ++end;
    const std::string word = raw.substr(start, end - start);
    const std::string rest = blank_prefix(raw, start, end - start);
    const int col = static_cast<int>(start) + 1;
    if (word == "over") {
      s.field = parse_field_decl(raw, line);
    } else if (word == "indep") {
      Expr e = parse_expression(rest, line);
      if (e.kind != Expr::Kind::Sym || e.primes) throw ParseError(line, e.column, {"identifier"}, "expected a name");
      s.indep = e.name;
    } else if (word == "kind") {
      Expr e = parse_expression(rest, line);
      const std::string k = e.kind == Expr::Kind::Sym ? e.name : "";
      if (k == "polynomial") {
        s.kind = ScriptKind::Polynomial;
      } else if (k == "rational") {
        s.kind = ScriptKind::Rational;
      } else if (k == "noetherian") {
        s.kind = ScriptKind::Noetherian;
      } else {
        throw ParseError(line, e.column, {"polynomial", "rational", "noetherian"}, "unknown chain kind");
      }
    } else if (word == "rule" || word == "ode" || word == "defining") {
      Equation eq = parse_equation(rest, line);
      check_no_field(eq, line);
      std::string name = expect_derivative(eq, line);
      if (word == "rule") {
        s.rules.emplace_back(std::move(name), std::move(eq.rhs));
      } else if (word == "ode") {
        s.ode = std::move(eq);
      } else {
        s.defining = std::move(eq);
      }
    } else if (word == "element") {
      s.element = parse_expression(rest, line);
    } else if (word == "assign") {
      Equation eq = parse_equation(rest, line);
      check_no_field(eq, line);
      if (eq.lhs.kind != Expr::Kind::Sym || eq.lhs.primes)
        throw ParseError(line, eq.lhs.column, {"chain variable"}, "left-hand side must be a chain variable");
      s.assignments.emplace_back(eq.lhs.name, std::move(eq.rhs));
    } else {
      throw ParseError(line, col, kDirectives, "unknown directive '" + word + "'");
    }
  }
  return s;
}

std::string to_string(const ChainScript& s) {
  std::ostringstream os;
  if (s.field) os << to_string(*s.field) << "\n";
  if (s.indep) os << "indep " << *s.indep << "\n";
  os << "kind "
     << (s.kind == ScriptKind::Polynomial ? "polynomial" : s.kind == ScriptKind::Rational ? "rational" : "noetherian")
     << "\n";
  for (const auto& [name, rhs] : s.rules) os << "rule " << name << "' = " << to_string(rhs) << "\n";
  if (s.element) os << "element " << to_string(*s.element) << "\n";
  if (s.ode) os << "ode " << to_string(*s.ode) << "\n";
  if (s.defining) os << "defining " << to_string(*s.defining) << "\n";
  for (const auto& [name, rhs] : s.assignments) os << "assign " << name << " = " << to_string(rhs) << "\n";
  return os.str();
}

namespace {

struct Setting {
  FieldHandle field;
  BaseDiffField base;
};

Setting setting_of(const ChainScript& s) {
  Setting out{build_field(s.field), {}};
  std::optional<std::string> tvar = s.indep;
  if (!tvar) {
    std::vector<const Expr*> exprs;
    std::vector<std::string> reserved;
    for (const auto& [name, rhs] : s.rules) {
      exprs.push_back(&rhs);
      reserved.push_back(name);
    }
    for (const auto& [name, rhs] : s.assignments) exprs.push_back(&rhs);
    if (s.element) exprs.push_back(&*s.element);
    if (s.ode) {
      exprs.push_back(&s.ode->rhs);
      reserved.push_back(s.ode->lhs.name);
    }
    if (s.defining) {
      exprs.push_back(&s.defining->rhs);
      reserved.push_back(s.defining->lhs.name);
    }
    tvar = detect_tvar(exprs, out.field, reserved);
  }
  out.base = tvar ? BaseDiffField::rational_functions(out.field, *tvar) : BaseDiffField::constants(out.field);
  return out;
}

DiffRatFunc lower_univariate(const Equation& eq, const BaseDiffField& base) {
  return lower(eq.rhs, make_ring(base, {eq.lhs.name}));
}

}  // namespace

LoweredChain lower_chain(const ChainScript& s) {
  if (s.rules.empty()) fail(ErrorCode::InvalidInput, "chain has no rules");
  const Setting set = setting_of(s);
  std::vector<std::string> names;
  for (const auto& r : s.rules) names.push_back(r.first);
  LoweredChain out{make_ring(set.base, names), {}, nullptr};
  for (const auto& r : s.rules) out.rules.push_back(lower(r.second, out.ring));
  if (s.kind == ScriptKind::Noetherian) {
    for (std::size_t i = 0; i < out.rules.size(); ++i)
      if (!out.rules[i].is_polynomial())
        fail(ErrorCode::NotPolynomialKind, "Noetherian rule " + std::to_string(i + 1) + " is not a polynomial");
    return out;
  }
  auto chain = std::make_shared<const PfaffianChain>(
      out.ring, s.kind == ScriptKind::Polynomial ? ChainKind::Polynomial : ChainKind::Rational, out.rules);
  chain_validate(*chain);
  out.chain = std::move(chain);
  return out;
}

VerifyResult run_forward(const ChainScript& s) {
  if (s.kind == ScriptKind::Noetherian) fail(ErrorCode::InvalidInput, "forward mode needs a Pfaffian chain");
  if (!s.element || !s.ode) fail(ErrorCode::InvalidInput, "forward mode needs 'element' and 'ode' lines");
  LoweredChain lc = lower_chain(s);
  const DiffRatFunc f = lower_univariate(*s.ode, lc.ring->base);
  return verify_forward(*lc.chain, lower(*s.element, lc.ring), f);
}

VerifyResult run_backward(const ChainScript& s) {
  if (!s.defining) fail(ErrorCode::InvalidInput, "backward mode needs a 'defining' line");
  LoweredChain lc = lower_chain(s);
  RingHandle wring = make_ring(lc.ring->base, {s.defining->lhs.name});
  const DiffRatFunc g = lower(s.defining->rhs, wring);
  if (s.assignments.size() != lc.rules.size())
    fail(ErrorCode::ArityMismatch, std::to_string(lc.rules.size()) + " rules but " +
                                       std::to_string(s.assignments.size()) + " assignments");
  std::vector<DiffRatFunc> values;
  for (const auto& name : lc.ring->vars) {
    auto it = std::find_if(s.assignments.begin(), s.assignments.end(),
                           [&](const auto& a) { return a.first == name; });
    if (it == s.assignments.end()) fail(ErrorCode::ArityMismatch, "no assignment for " + name);
    values.push_back(lower(it->second, wring));
  }
  return verify_backward(g, values, lc.rules);
}

namespace {

std::optional<FieldDecl> decl_of(const FieldHandle& field) {
  if (!field) return std::nullopt;
  const std::string& g = field->generator();
  return parse_field_decl("over Q(" + g + ": " + to_string(from_rational(field->minpoly()), g) + ")");
}

void set_context(ChainScript& s, const BaseDiffField& base) {
  s.field = decl_of(base.field());
  s.indep = base.tvar();
}

Equation derivative_equation(const DiffRatFunc& f) {
  return Equation{Expr::sym(f.ring()->vars[0], 1), parse_expression(to_string(f)), std::nullopt};
}

}  // namespace

ChainScript presentation_script(const PresentationCertificate& cert, const DiffRatFunc& f) {
  ChainScript s;
  set_context(s, f.ring()->base);
  s.kind = ScriptKind::Polynomial;
  s.rules.emplace_back(cert.chain->ring()->vars[0], parse_expression(to_string(cert.chain->rules()[0])));
  s.element = parse_expression(to_string(cert.element));
  s.ode = derivative_equation(f);
  return s;
}

ChainScript polynomial_script(const DiffRatFunc& f) {
  ChainScript s;
  set_context(s, f.ring()->base);
  s.kind = ScriptKind::Polynomial;
  s.rules.emplace_back(f.ring()->vars[0], parse_expression(to_string(f)));
  s.element = Expr::sym(f.ring()->vars[0]);
  s.ode = derivative_equation(f);
  return s;
}

ChainScript noetherian_script(const NoetherianSystem& sys, const DiffRatFunc& f) {
  ChainScript s;
  set_context(s, f.ring()->base);
  s.kind = ScriptKind::Noetherian;
  for (std::size_t i = 0; i < sys.rules.size(); ++i)
    s.rules.emplace_back(sys.ring->vars[i], parse_expression(to_string(sys.rules[i])));
  s.defining = derivative_equation(f);
  const std::string& y = f.ring()->vars[0];
  s.assignments.emplace_back(sys.ring->vars[0], Expr::sym(y));
  const DiffRatFunc w(DiffPoly::constant(f.ring(), KtElement(1L)), f.den());
  s.assignments.emplace_back(sys.ring->vars[1], parse_expression(to_string(w)));
  return s;
}

}  // namespace pfaffkit
