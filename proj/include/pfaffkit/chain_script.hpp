#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfaffkit/chains.hpp"
#include "pfaffkit/expr.hpp"

namespace pfaffkit {

enum class ScriptKind { Polynomial, Rational, Noetherian };

/// Line-oriented chain description shared by `chain-verify` and the
/// certificates embedded in reports:
///
///   over Q(r: r^2 - 2)
///   indep z
///   kind polynomial | rational | noetherian
///   rule y1' = <expr>          (one per chain variable, in order)
///   element <expr>             (forward)
///   ode y' = <expr>            (forward)
///   defining W' = <expr>       (backward)
///   assign y1 = <expr>         (backward)
///
/// `#` starts a comment.
struct ChainScript {
  std::optional<FieldDecl> field;
  std::optional<std::string> indep;
  ScriptKind kind = ScriptKind::Polynomial;
  std::vector<std::pair<std::string, Expr>> rules;
  std::optional<Expr> element;
  std::optional<Equation> ode;
  std::optional<Equation> defining;
  std::vector<std::pair<std::string, Expr>> assignments;

  friend bool operator==(const ChainScript&, const ChainScript&) = default;
};

ChainScript parse_chain_script(const std::string& text);
std::string to_string(const ChainScript& s);

/// Rules lowered into their ring; `chain` is null for Noetherian scripts.
struct LoweredChain {
  RingHandle ring;
  std::vector<DiffRatFunc> rules;
  ChainHandle chain;
};

LoweredChain lower_chain(const ChainScript& s);

VerifyResult run_forward(const ChainScript& s);
VerifyResult run_backward(const ChainScript& s);

/// Script text for a one-rule presentation certificate (forward mode).
ChainScript presentation_script(const PresentationCertificate& cert, const DiffRatFunc& f);
/// Script text for a polynomial right-hand side (forward mode, element y).
ChainScript polynomial_script(const DiffRatFunc& f);
/// Script text for a Noetherian system checked against y' = f(y) (backward mode).
ChainScript noetherian_script(const NoetherianSystem& sys, const DiffRatFunc& f);

}  // namespace pfaffkit
