#include "pfaffkit/app.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "pfaffkit/chain_script.hpp"
#include "pfaffkit/lowering.hpp"

namespace pfaffkit {

using nlohmann::json;

namespace {

struct Report {
  json result = json::object();
  std::vector<std::string> anchors;
  std::vector<std::string> provenance;
};

void note_field(Report& r, const FieldHandle& field) {
  if (!field) return;
  const std::string poly = to_string(from_rational(field->minpoly()), field->generator());
  if (field->status() == Irreducibility::Verified) {
    r.provenance.push_back("irreducibility of " + poly + " verified");
  } else {
    r.provenance.push_back("irreducibility of " + poly + " asserted, not verified");
  }
}

std::string base_text(const BaseDiffField& base) {
  std::string k = describe_field(base.field());
  return base.tvar() ? k + "(" + *base.tvar() + ")" : k;
}

json series_json(const GroupVerdict& v) {
  json out = {{"verdict", to_string(v.truth)}, {"reason", v.reason}};
  if (v.truth == Truth::Yes) {
    json steps = json::array();
    for (const auto& s : v.series)
      steps.push_back({{"group", s.group}, {"normal", s.normal}, {"quotient", to_string(s.quotient)}});
    out["series"] = steps;
  }
  if (v.obstruction) out["obstruction"] = to_string(*v.obstruction);
  return out;
}

json residues_json(const ResidueData& d) {
  json pts = json::array();
  for (const auto& p : d.finite) {
    json e = {{"pole", to_string(p.pole)}, {"order", p.order}};
    e["residue"] = p.residue ? json(to_string(*p.residue)) : json(nullptr);
    pts.push_back(e);
  }
  return {{"finite", pts}, {"at_infinity", to_string(d.at_infinity)}, {"complete", d.complete}};
}

json certificate_json(const ChainScript& s, const char* mode) {
  return {{"mode", mode}, {"script", to_string(s)}};
}

Report classify_ode(const std::string& text, int degree_bound, const std::vector<std::string>& candidates) {
  Report r;
  const Equation eq = parse_equation(text);
  r.result["equation"] = to_string(eq);
  if (auto w = lower_weierstrass(eq)) {
    note_field(r, build_field(eq.field));
    Verdict v = weierstrass_check(w->g2, w->g3);
    r.result["form"] = "weierstrass";
    r.result["g2"] = to_string(w->g2);
    r.result["g3"] = to_string(w->g3);
    r.result["pfaffian"] = to_string(v.pfaffian);
    r.result["rationally_pfaffian"] = to_string(v.rationally_pfaffian);
    r.result["one_reducible"] = to_string(v.one_reducible);
    r.result["criterion"] = v.criterion;
    r.result["reason"] = v.reason;
    r.result["notes"] = v.notes;
    r.anchors = {"elliptic binding group", "eulerian series"};
    return r;
  }
  const OrderOneOde ode = lower_order_one(eq);
  note_field(r, ode.ring->base.field());
  ClassifyOptions opts;
  opts.factored = ode.factored;
  opts.degree_bound = degree_bound;
  for (const auto& c : candidates) opts.candidates.push_back(lower_candidate(parse_expression(c), ode.ring->base.field()));
  Verdict v = classify_order_one(ode.f, opts);
  r.result["form"] = "order-one";
  r.result["base"] = base_text(ode.ring->base);
  r.result["f"] = to_string(ode.f);
  r.result["pfaffian"] = to_string(v.pfaffian);
  r.result["rationally_pfaffian"] = to_string(v.rationally_pfaffian);
  r.result["criterion"] = v.criterion;
  r.result["reason"] = v.reason;
  if (v.factored) {
    r.result["factored"] = to_string(*v.factored, ode.ring->vars[0]);
    r.result["degree_criterion"] = degree_criterion(*v.factored);
  }
  if (v.residues) r.result["residues_of_dx_over_f"] = residues_json(*v.residues);
  if (v.certificate) {
    const std::string b = v.certificate->chain->ring()->vars[0];
    r.result["presentation"] = {{"h", to_string(v.certificate->element)},
                                {"P", to_string(v.certificate->chain->rules()[0])},
                                {"variable", b}};
    r.result["certificate"] = certificate_json(presentation_script(*v.certificate, ode.f), "forward");
    r.anchors.push_back("presentation search");
  } else if (v.chain) {
    r.result["certificate"] = certificate_json(polynomial_script(ode.f), "forward");
    r.anchors.push_back("polynomial chain");
  }
  if (v.pfaffian == Truth::No) {
    r.anchors.push_back("degree criterion");
    r.anchors.push_back("strict disintegration");
  }
  json rules = json::array();
  for (const auto& p : v.noetherian->rules) rules.push_back(to_string(p));
  r.result["noetherian_system"] = {{"variables", v.noetherian->ring->vars},
                                   {"rules", rules},
                                   {"certificate", certificate_json(noetherian_script(*v.noetherian, ode.f), "backward")}};
  r.anchors.push_back("noetherianization");
  if (v.pfaffian == Truth::Unknown) r.provenance.push_back("presentation search is a semi-decision; unknown is not no");
  return r;
}

Report classify_linear_cmd(const std::string& text, const std::string& group_text) {
  Report r;
  const Equation eq = parse_equation(text);
  const GroupExpr group = parse_group(group_text);
  const LinearOde ode = lower_linear(eq);
  note_field(r, ode.base.field());
  LinearReport rep = classify_linear(ode.base, ode.coeffs, group);
  const std::string tvar = ode.base.tvar().value_or("t");
  json coeffs = json::array();
  for (const auto& c : ode.coeffs) coeffs.push_back(to_string(c, tvar));
  r.result["equation"] = to_string(eq);
  r.result["base"] = base_text(ode.base);
  r.result["order"] = ode.coeffs.size() - 1;
  r.result["coefficients"] = coeffs;
  r.result["declared_group"] = to_string(group);
  r.result["pfaffian"] = to_string(rep.pfaffian);
  r.result["eulerian"] = series_json(rep.eulerian);
  r.result["min_solvability_d"] = rep.min_solvability_d ? json(*rep.min_solvability_d) : json(nullptr);
  if (rep.reducibility) {
    r.result["reducibility"] = {{"reducible_at", rep.reducibility->reducible_at},
                                {"not_reducible_at", rep.reducibility->not_reducible_at},
                                {"derivation", rep.reducibility->derivation}};
    r.anchors.push_back("generic transitivity");
  }
  r.result["logderiv_reduction"] = to_string(rep.logderiv_reduction.poly);
  r.result["notes"] = rep.notes;
  if (ode.normalized) r.provenance.push_back("equation divided by its leading coefficient");
  r.provenance.push_back("Galois group declared by the caller, not computed");
  r.anchors.push_back("eulerian series");
  r.anchors.push_back("logarithmic derivative reduction");
  return r;
}

AllowedSet parse_allowed(const std::string& s) {
  if (s == "eulerian") return AllowedSet::eulerian();
  if (s == "1-reducible") return AllowedSet::one_reducible_internal();
  const std::string prefix = "d-solvable:";
  if (s.rfind(prefix, 0) == 0) {
    const std::string digits = s.substr(prefix.size());
    if (digits.empty() || digits.size() > 6 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      fail(ErrorCode::InvalidD, "expected d-solvable:<positive integer>, got '" + s + "'");
    return AllowedSet::d_solvable(std::stoi(digits));
  }
  fail(ErrorCode::InvalidInput, "allowed set must be eulerian, 1-reducible or d-solvable:<d>");
}

Report group_check(const std::string& allowed_text, const std::string& group_text) {
  Report r;
  const AllowedSet allowed = parse_allowed(allowed_text);
  const GroupExpr g = parse_group(group_text);
  r.result = series_json(check_series(g, allowed));
  r.result["group"] = to_string(g);
  r.result["allowed"] = to_string(allowed);
  r.anchors.push_back("subnormal series");
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidInput, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Report chain_verify(const std::string& mode, const std::string& path) {
  Report r;
  const ChainScript s = parse_chain_script(read_file(path));
  note_field(r, build_field(s.field));
  VerifyResult v;
  if (mode == "forward") {
    v = run_forward(s);
  } else if (mode == "backward") {
    v = run_backward(s);
  } else {
    fail(ErrorCode::InvalidInput, "mode must be forward or backward");
  }
  r.result["mode"] = mode;
  r.result["result"] = v.pass ? "pass" : "fail";
  if (!v.pass) {
    if (v.index) r.result["failing_rule"] = v.index;
    if (v.witness) r.result["residual"] = to_string(*v.witness);
  }
  r.anchors.push_back(mode == "forward" ? "forward verification" : "backward verification");
  return r;
}

Report noetherianize(const std::string& text) {
  Report r;
  const Equation eq = parse_equation(text);
  const OrderOneOde ode = lower_order_one(eq);
  note_field(r, ode.ring->base.field());
  const std::string& y = ode.ring->vars[0];
  NoetherianSystem sys = rational_to_noetherian(ode.f.num(), ode.f.den(), y, y == "w" ? "v" : "w");
  const ChainScript script = noetherian_script(sys, ode.f);
  const VerifyResult check = run_backward(script);
  if (!check.pass) fail(ErrorCode::InternalInvariant, "Noetherian system failed its own verification");
  json rules = json::array();
  for (const auto& p : sys.rules) rules.push_back(to_string(p));
  r.result["equation"] = to_string(eq);
  r.result["variables"] = sys.ring->vars;
  r.result["rules"] = rules;
  r.result["verified"] = "pass";
  r.result["certificate"] = certificate_json(script, "backward");
  r.anchors.push_back("noetherianization");
  return r;
}

Report residues(const std::string& text) {
  Report r;
  const Equation eq = parse_equation(text);
  const OrderOneOde ode = lower_order_one(eq);
  note_field(r, ode.ring->base.field());
  if (!ode.ring->base.is_constant()) fail(ErrorCode::NonConstantBase, "residues need constant coefficients");
  std::optional<FactoredRatFunc> f = ode.factored ? ode.factored : factor_ratfunc(ode.f);
  if (!f) fail(ErrorCode::InvalidInput, "f does not split into linear factors over " + describe_field(ode.ring->base.field()));
  const ResidueData d = residues_of_inverse(*f);
  AlgebraicScalar total = d.at_infinity;
  for (const auto& p : d.finite)
    if (p.residue) total = total + *p.residue;
  r.result["factored"] = to_string(*f, ode.ring->vars[0]);
  r.result["residues_of_dx_over_f"] = residues_json(d);
  r.result["residue_sum"] = d.complete ? json(to_string(total)) : json(nullptr);
  const Finding dis = strict_disintegration_test(*f);
  r.result["strict_disintegration"] = {{"verdict", to_string(dis.truth)}, {"reason", dis.reason}};
  r.anchors.push_back("residue formula");
  r.anchors.push_back("strict disintegration");
  return r;
}

Report logderiv_reduce(const std::string& text) {
  Report r;
  const Equation eq = parse_equation(text);
  const LinearOde ode = lower_linear(eq);
  note_field(r, ode.base.field());
  const DiffIndeterminateExpr red = riccati_reduce(ode.base, ode.coeffs);
  r.result["equation"] = to_string(eq);
  r.result["reduction"] = to_string(red.poly);
  r.result["order"] = differential_order(red.poly);
  if (ode.normalized) r.provenance.push_back("equation divided by its leading coefficient");
  r.anchors.push_back("logarithmic derivative reduction");
  return r;
}

Report search_presentation_cmd(const std::string& text, const std::vector<std::string>& candidates, int bound,
                               bool no_catalog) {
  Report r;
  const Equation eq = parse_equation(text);
  const OrderOneOde ode = lower_order_one(eq);
  note_field(r, ode.ring->base.field());
  std::vector<PresentationCandidate> extra;
  for (const auto& c : candidates) extra.push_back(lower_candidate(parse_expression(c), ode.ring->base.field()));
  auto cert = search_presentation(ode.f, extra, bound, !no_catalog);
  r.result["equation"] = to_string(eq);
  r.result["verdict"] = cert ? "yes" : "unknown";
  if (cert) {
    r.result["presentation"] = {{"h", to_string(cert->element)},
                                {"P", to_string(cert->chain->rules()[0])},
                                {"variable", cert->chain->ring()->vars[0]}};
    r.result["certificate"] = certificate_json(presentation_script(*cert, ode.f), "forward");
  } else {
    r.provenance.push_back("presentation search is a semi-decision; unknown is not no");
  }
  r.anchors.push_back("presentation search");
  return r;
}

json error_json(const Error& e) {
  json out = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    out["line"] = pe->line();
    out["column"] = pe->column();
    out["expected"] = pe->expected();
  }
  if (const auto* te = dynamic_cast<const TriangularityError*>(&e)) {
    out["rule"] = te->rule();
    out["variable"] = te->variable();
  }
  return out;
}

json envelope_base(const std::string& command, const std::vector<std::string>& args) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"input", args}};
}

Outcome run_batch(const std::string& path, const std::vector<std::string>& args);

Outcome dispatch(const std::vector<std::string>& args) {
  CLI::App app{"pfaffkit: Pfaffian certificates for algebraic differential equations"};
  app.require_subcommand(1);
  std::string equation, group, allowed, mode, file;
  std::vector<std::string> candidates;
  int bound = 3;
  bool no_catalog = false;

  auto* ode = app.add_subcommand("classify-ode", "Classify y' = f(y)");
  ode->add_option("equation", equation)->required();
  ode->add_option("--degree-bound", bound);
  ode->add_option("--candidate", candidates);
  auto* lin = app.add_subcommand("classify-linear", "Classify a linear ODE with a declared Galois group");
  lin->add_option("equation", equation)->required();
  lin->add_option("--group", group)->required();
  auto* gc = app.add_subcommand("group-check", "Search for a subnormal series with allowed quotients");
  gc->add_option("--allowed", allowed)->required();
  gc->add_option("group", group)->required();
  auto* cv = app.add_subcommand("chain-verify", "Verify a chain script");
  cv->add_option("--mode", mode)->required();
  cv->add_option("file", file)->required();
  auto* nz = app.add_subcommand("noetherianize", "Noetherian system for y' = P(y)/Q(y)");
  nz->add_option("equation", equation)->required();
  auto* rs = app.add_subcommand("residues", "Residues of dx/f");
  rs->add_option("equation", equation)->required();
  auto* lr = app.add_subcommand("logderiv-reduce", "Equation satisfied by u = y'/y");
  lr->add_option("equation", equation)->required();
  auto* sp = app.add_subcommand("search-presentation", "Search y = h(b), b' = P(b)");
  sp->add_option("equation", equation)->required();
  sp->add_option("--candidate", candidates);
  sp->add_option("--degree-bound", bound);
  sp->add_flag("--no-catalog", no_catalog);
  auto* batch = app.add_subcommand("batch", "Run a script of commands, one per line");
  batch->add_option("file", file)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  const std::string command = args.empty() ? "" : args.front();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    json env = envelope_base(command, args);
    env["help"] = app.help();
    return {env, 0};
  } catch (const CLI::ParseError& e) {
    json env = envelope_base(command, args);
    env["error"] = {{"code", "UsageError"}, {"message", e.what()}};
    return {env, 1};
  }

  if (batch->parsed()) return run_batch(file, args);
  Report r;
  if (ode->parsed()) {
    r = classify_ode(equation, bound, candidates);
  } else if (lin->parsed()) {
    r = classify_linear_cmd(equation, group);
  } else if (gc->parsed()) {
    r = group_check(allowed, group);
  } else if (cv->parsed()) {
    r = chain_verify(mode, file);
  } else if (nz->parsed()) {
    r = noetherianize(equation);
  } else if (rs->parsed()) {
    r = residues(equation);
  } else if (lr->parsed()) {
    r = logderiv_reduce(equation);
  } else {
    r = search_presentation_cmd(equation, candidates, bound, no_catalog);
  }
  json env = envelope_base(command, args);
  env["result"] = r.result;
  env["anchors"] = r.anchors;
  env["provenance"] = r.provenance;
  return {env, 0};
}

Outcome run_batch(const std::string& path, const std::vector<std::string>& args) {
  const std::string text = read_file(path);
  std::istringstream in(text);
  std::string line;
  json runs = json::array();
  int worst = 0;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::vector<std::string> sub;
    try {
      sub = split_command_line(line);
    } catch (const Error& e) {
      json env = envelope_base("", {line});
      env["error"] = error_json(e);
      runs.push_back({{"exit_code", 1}, {"envelope", env}});
      worst = std::max(worst, 1);
      continue;
    }
    if (!sub.empty() && sub.front() == "batch") {
      json env = envelope_base("batch", sub);
      env["error"] = {{"code", to_string(ErrorCode::InvalidInput)}, {"message", "nested batch"}};
      runs.push_back({{"exit_code", 1}, {"envelope", env}});
      worst = std::max(worst, 1);
      continue;
    }
    Outcome o = run_cli(sub);
    worst = std::max(worst, o.exit_code);
    runs.push_back({{"exit_code", o.exit_code}, {"envelope", o.envelope}});
  }
  json env = envelope_base("batch", args);
  env["result"] = {{"runs", runs}, {"count", runs.size()}};
  env["anchors"] = json::array();
  env["provenance"] = json::array();
  return {env, worst};
}

}  // namespace

std::vector<std::string> split_command_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false, have = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
      have = true;
    } else if (!quoted && std::isspace(static_cast<unsigned char>(c))) {
      if (have) out.push_back(cur);
      cur.clear();
      have = false;
    } else {
      cur += c;
      have = true;
    }
  }
  if (quoted) throw ParseError(1, static_cast<int>(line.size()) + 1, {"'\"'"}, "unterminated quote");
  if (have) out.push_back(cur);
  return out;
}

Outcome run_cli(const std::vector<std::string>& args) {
  const std::string command = args.empty() ? "" : args.front();
  try {
    return dispatch(args);
  } catch (const Error& e) {
    json env = envelope_base(command, args);
    env["error"] = error_json(e);
    return {env, e.code() == ErrorCode::InternalInvariant ? 2 : 1};
  } catch (const std::exception& e) {
    json env = envelope_base(command, args);
    env["error"] = {{"code", to_string(ErrorCode::InternalInvariant)}, {"message", e.what()}};
    return {env, 2};
  }
}

}  // namespace pfaffkit
