#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfaffkit/rational.hpp"

namespace pfaffkit {

/// Untyped expression tree produced by the parser. Symbols carry a prime
/// count: y, y', y'' are distinct leaves.
struct Expr {
  enum class Kind { Num, Sym, Add, Sub, Mul, Div, Pow, Neg };

  Kind kind = Kind::Num;
  Integer value;          // Num
  std::string name;       // Sym
  int primes = 0;         // Sym
  unsigned exponent = 0;  // Pow
  std::vector<Expr> args;
  int column = 0;  // 1-based source position; ignored by ==

  static Expr num(Integer v, int column = 0);
  static Expr sym(std::string name, int primes = 0, int column = 0);
  static Expr binary(Kind kind, Expr a, Expr b, int column = 0);
  static Expr neg(Expr a, int column = 0);
  static Expr pow(Expr base, unsigned exponent, int column = 0);

  friend bool operator==(const Expr& a, const Expr& b);
};

inline constexpr unsigned kMaxExponent = 64;

/// `over Q` or `over Q(r: <polynomial in r>)`.
struct FieldDecl {
  std::optional<std::string> generator;
  std::optional<Expr> minpoly;

  friend bool operator==(const FieldDecl&, const FieldDecl&) = default;
};

struct Equation {
  Expr lhs;
  Expr rhs;
  std::optional<FieldDecl> field;

  friend bool operator==(const Equation&, const Equation&) = default;
};

/// Canonical text with minimal parentheses; parses back to an equal tree.
std::string to_string(const Expr& e);
std::string to_string(const FieldDecl& f);
std::string to_string(const Equation& eq);

/// `line` is reported in ParseError diagnostics.
Expr parse_expression(std::string_view text, int line = 1);
FieldDecl parse_field_decl(std::string_view text, int line = 1);
/// lhs = rhs [over Q(...)].
Equation parse_equation(std::string_view text, int line = 1);

/// Every symbol (name, primes) occurring in e, in first-occurrence order.
std::vector<std::pair<std::string, int>> symbols_of(const Expr& e);

}  // namespace pfaffkit
