#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "pfaffkit/app.hpp"
#include "support.hpp"

using namespace testkit;
using nlohmann::json;

namespace {

Outcome cli(std::vector<std::string> args) { return run_cli(args); }

std::string temp_script(const std::string& text) {
  static int counter = 0;
  const auto path = std::filesystem::temp_directory_path() /
                    ("pfaffkit_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".chain");
  std::ofstream(path) << text;
  return path.string();
}

// Feeds a certificate back through chain-verify.
bool certificate_verifies(const json& cert) {
  const std::string path = temp_script(cert.at("script").get<std::string>());
  const Outcome o = cli({"chain-verify", "--mode", cert.at("mode").get<std::string>(), path});
  std::filesystem::remove(path);
  return o.exit_code == 0 && o.envelope["result"]["result"] == "pass";
}

void check_certificates(const json& result) {
  if (result.contains("certificate")) REQUIRE(certificate_verifies(result["certificate"]));
  if (result.contains("noetherian_system")) REQUIRE(certificate_verifies(result["noetherian_system"]["certificate"]));
}

Expr rand_expr(Rng& rng, int depth, bool only_y = false) {
  static const char* leaves[] = {"y", "t", "r", "x"};
  if (depth == 0 || uniform(rng, 0, 3) == 0) {
    if (uniform(rng, 0, 1) == 0) return Expr::num(Integer(static_cast<long>(uniform(rng, 0, 20))));
    if (only_y) return Expr::sym("y");
    return Expr::sym(leaves[uniform(rng, 0, 3)], static_cast<int>(uniform(rng, 0, 4) == 0));
  }
  if (only_y) {
    const Expr a = rand_expr(rng, depth - 1, true), b = rand_expr(rng, depth - 1, true);
    switch (uniform(rng, 0, 3)) {
      case 0: return Expr::binary(Expr::Kind::Add, a, b);
      case 1: return Expr::binary(Expr::Kind::Sub, a, b);
      case 2: return Expr::binary(Expr::Kind::Mul, a, b);
      default: return Expr::binary(Expr::Kind::Div, a, b);
    }
  }
  switch (uniform(rng, 0, 6)) {
    case 0: return Expr::binary(Expr::Kind::Add, rand_expr(rng, depth - 1), rand_expr(rng, depth - 1));
    case 1: return Expr::binary(Expr::Kind::Sub, rand_expr(rng, depth - 1), rand_expr(rng, depth - 1));
    case 2: return Expr::binary(Expr::Kind::Mul, rand_expr(rng, depth - 1), rand_expr(rng, depth - 1));
    case 3: return Expr::binary(Expr::Kind::Div, rand_expr(rng, depth - 1), rand_expr(rng, depth - 1));
    case 4: return Expr::pow(rand_expr(rng, depth - 1), static_cast<unsigned>(uniform(rng, 0, 5)));
    default: return Expr::neg(rand_expr(rng, depth - 1));
  }
}

std::string rand_tokens(Rng& rng) {
  static const char* tokens[] = {"y", "t", "z", "r", "(", ")", "+", "-", "*", "/", "^", "1", "2", "3",
                                 "'", "=", " ", "y'", "over Q(r: r^2-2)", "over Q", "1/2", "0", "w", ":"};
  std::string s;
  const int n = static_cast<int>(uniform(rng, 0, 14));
  for (int i = 0; i < n; ++i) s += tokens[uniform(rng, 0, std::size(tokens) - 1)];
  return s;
}

std::string mutate(Rng& rng, std::string s) {
  if (s.empty()) return s;
  const std::size_t at = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(s.size()) - 1));
  switch (uniform(rng, 0, 2)) {
    case 0: s.erase(at, 1); break;
    case 1: s.insert(at, 1, "()+-*/^'y2="[uniform(rng, 0, 10)]); break;
    default: s[at] = "()+-*/^'yt3"[uniform(rng, 0, 10)];
  }
  return s;
}

const std::vector<std::string> kEquations = {
    "y' = 1/(2*y)",
    "y' = y^2 + t*y",
    "y' = (y-2)*(y-(1+r))/(y*(y-1)) over Q(r: r^2-2)",
    "y' = (y-2)*(y-3)/(y*(y-1))",
    "y' = (y-1)*(y-2)*(y-3)*(y-r)/y over Q(r: r^2-2)",
    "y' = y^3 - 1",
    "y' = 1/(y^2 + 1)",
    "y' = -y^2*(1/y)^3/2",
    "y''' - t*y = 0",
    "y'' - t*y = 0",
    "y'^2 = 4*y^3 - 4*y - 1",
};

}  // namespace

TEST_CASE("fixture scripts round-trip through the printer") {
  for (const char* name : {"lambert.chain", "sqrt.chain"}) {
    CAPTURE(name);
    const ChainScript s = parse_chain_script(read_fixture(name));
    CHECK(parse_chain_script(to_string(s)) == s);
    CHECK(to_string(parse_chain_script(to_string(s))) == to_string(s));
  }
  for (const auto& text : kEquations) {
    CAPTURE(text);
    const Equation eq = parse_equation(text);
    CHECK(parse_equation(to_string(eq)) == eq);
  }
}

TEST_CASE("random expressions round-trip") {
  Rng rng(31);
  for (int i = 0; i < 3000; ++i) {
    const Expr e = rand_expr(rng, 4);
    const std::string text = to_string(e);
    CAPTURE(text);
    REQUIRE(parse_expression(text) == e);
  }
}

TEST_CASE("parse errors carry positions") {
  const Outcome o = cli({"classify-ode", "y' = )("});
  CHECK(o.exit_code == 1);
  CHECK(o.envelope["error"]["code"] == "ParseError");
  CHECK(o.envelope["error"]["column"] == 6);
  CHECK(o.envelope["error"]["line"] == 1);
  CHECK_FALSE(o.envelope["error"]["expected"].empty());

  CHECK(cli({}).exit_code == 1);
  CHECK(cli({"frobnicate"}).exit_code == 1);
  CHECK(cli({"group-check", "GL(2)"}).exit_code == 1);
  CHECK(cli({"group-check", "--allowed", "d-solvable:x", "GL(2)"}).envelope["error"]["code"] == "InvalidD");
  CHECK(cli({"chain-verify", "--mode", "backward", "/nonexistent/file"}).exit_code == 1);
  CHECK(split_command_line("classify-ode \"y' = y\" --degree-bound 2") ==
        std::vector<std::string>{"classify-ode", "y' = y", "--degree-bound", "2"});
}

TEST_CASE("envelope examples") {
  const Outcome b = cli({"classify-ode", "y' = (y-2)*(y-(1+r))/(y*(y-1)) over Q(r: r^2-2)"});
  REQUIRE(b.exit_code == 0);
  const json& r = b.envelope["result"];
  CHECK(b.envelope["schema_version"] == kSchemaVersion);
  CHECK(b.envelope["command"] == "classify-ode");
  CHECK(r["pfaffian"] == "no");
  CHECK(r["rationally_pfaffian"] == "yes");
  CHECK(r["criterion"] == "degree+disintegration");
  CHECK(r["factored"].is_string());
  CHECK(r["residues_of_dx_over_f"]["finite"][0]["residue"] == "(-2 - 2*r)");
  CHECK(r["residues_of_dx_over_f"]["at_infinity"] == "(-2 - r)");
  CHECK(r["noetherian_system"]["rules"].size() == 2);
  check_certificates(r);

  const Outcome lam = cli({"chain-verify", "--mode", "backward", std::string(PFAFFKIT_FIXTURES) + "/lambert.chain"});
  CHECK(lam.exit_code == 0);
  CHECK(lam.envelope["result"]["result"] == "pass");

  const Outcome g = cli({"group-check", "--allowed", "d-solvable:2", "GL(3)"});
  CHECK(g.exit_code == 0);
  CHECK(g.envelope["result"]["verdict"] == "no");
  CHECK(g.envelope["result"]["obstruction"] == "PSL(3)");

  const Outcome e = cli({"group-check", "--allowed", "eulerian", "Ext(SL(2), Gm)"});
  CHECK(e.envelope["result"]["verdict"] == "yes");
  CHECK(e.envelope["result"]["series"][0]["group"] == "Ext(SL(2), Gm)");

  const Outcome sq = cli({"classify-ode", "y' = 1/(2*y)"});
  CHECK(sq.envelope["result"]["pfaffian"] == "yes");
  CHECK(sq.envelope["result"]["presentation"]["P"].is_string());
  check_certificates(sq.envelope["result"]);

  const Outcome lin = cli({"classify-linear", "y''' - t*y = 0", "--group", "SL(3)"});
  CHECK(lin.envelope["result"]["pfaffian"] == "no");
  CHECK(lin.envelope["result"]["logderiv_reduction"] == "u^3 + 3*u*u' + u'' - t");

  const Outcome res = cli({"residues", "y' = (y-1)*(y+1)"});
  CHECK(res.envelope["result"]["residue_sum"] == "0");

  const Outcome w = cli({"classify-ode", "y'^2 = 4*y^3 - 3*y - 1"});
  CHECK(w.exit_code == 1);
  CHECK(w.envelope["error"]["code"] == "DegenerateCurve");
}

TEST_CASE("every verdict envelope's certificates re-verify") {
  for (const auto& text : kEquations) {
    CAPTURE(text);
    for (const char* command : {"classify-ode", "noetherianize", "search-presentation"}) {
      const Outcome o = cli({command, text});
      REQUIRE(o.exit_code != 2);
      if (o.exit_code == 0) check_certificates(o.envelope["result"]);
    }
  }
  Rng rng(12);
  for (int i = 0; i < 40; ++i) {
    const RingHandle y = const_ring({"y"});
    const DiffRatFunc f(rand_diffpoly(rng, y, 3, 3) + DiffPoly::variable(y, 0), DiffPoly::variable(y, 0).pow(2) + DiffPoly::constant(y, KtElement(1L)));
    const Outcome o = cli({"classify-ode", "y' = " + to_string(f)});
    REQUIRE(o.exit_code == 0);
    if (o.envelope["result"]["pfaffian"] == "yes") REQUIRE(o.envelope["result"].contains("certificate"));
    check_certificates(o.envelope["result"]);
  }
}

TEST_CASE("batch scripts") {
  const std::string path = temp_script(
      "# comment\n"
      "group-check --allowed eulerian \"SL(3)\"\n"
      "classify-ode \"y' = )(\"\n"
      "\n"
      "residues \"y' = y*(y - 1)\"\n"
      "batch nested\n");
  const Outcome o = cli({"batch", path});
  std::filesystem::remove(path);
  CHECK(o.exit_code == 1);
  const json& runs = o.envelope["result"]["runs"];
  REQUIRE(runs.size() == 4);
  CHECK(runs[0]["exit_code"] == 0);
  CHECK(runs[1]["exit_code"] == 1);
  CHECK(runs[2]["exit_code"] == 0);
  CHECK(runs[3]["exit_code"] == 1);
}

TEST_CASE("fuzzed inputs never reach exit code 2") {
  Rng rng(77);
  const std::vector<std::string> commands = {"classify-ode", "residues",     "noetherianize",
                                             "search-presentation", "logderiv-reduce"};
  int verdicts = 0;
  for (int i = 0; i < 1500; ++i) {
    std::string text;
    switch (i % 3) {
      case 0: text = rand_tokens(rng); break;
      case 1: text = mutate(rng, kEquations[uniform(rng, 0, kEquations.size() - 1)]); break;
      default: text = "y' = " + to_string(rand_expr(rng, 3, true));
    }
    const std::string& command = commands[uniform(rng, 0, commands.size() - 1)];
    CAPTURE(command);
    CAPTURE(text);
    const Outcome o = cli({command, text});
    REQUIRE(o.exit_code != 2);
    REQUIRE((o.exit_code == 0) == o.envelope.contains("result"));
    verdicts += o.exit_code == 0;
  }
  MESSAGE(verdicts << " of 1500 fuzzed equations produced a verdict");
  CHECK(verdicts > 150);
  for (int i = 0; i < 300; ++i) {
    const std::string g = mutate(rng, to_string(groups_depth2()[uniform(rng, 0, 819)]));
    CAPTURE(g);
    REQUIRE(cli({"group-check", "--allowed", "eulerian", g}).exit_code != 2);
    REQUIRE(cli({"classify-linear", "y'' - t*y = 0", "--group", g}).exit_code != 2);
  }
  for (int i = 0; i < 200; ++i) {
    const std::string path = temp_script(mutate(rng, mutate(rng, read_fixture("lambert.chain"))));
    for (const char* mode : {"forward", "backward"}) REQUIRE(cli({"chain-verify", "--mode", mode, path}).exit_code != 2);
    std::filesystem::remove(path);
  }
}
