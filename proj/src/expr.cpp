#include "pfaffkit/expr.hpp"

#include <cctype>

#include "pfaffkit/error.hpp"

namespace pfaffkit {

Expr Expr::num(Integer v, int column) {
  Expr e;
  e.kind = Kind::Num;
  e.value = std::move(v);
  e.column = column;
  return e;
}

Expr Expr::sym(std::string name, int primes, int column) {
  Expr e;
  e.kind = Kind::Sym;
  e.name = std::move(name);
  e.primes = primes;
  e.column = column;
  return e;
}

Expr Expr::binary(Kind kind, Expr a, Expr b, int column) {
  Expr e;
  e.kind = kind;
  e.args = {std::move(a), std::move(b)};
  e.column = column;
  return e;
}

Expr Expr::neg(Expr a, int column) {
  Expr e;
  e.kind = Kind::Neg;
  e.args = {std::move(a)};
  e.column = column;
  return e;
}

Expr Expr::pow(Expr base, unsigned exponent, int column) {
  Expr e;
  e.kind = Kind::Pow;
  e.exponent = exponent;
  e.args = {std::move(base)};
  e.column = column;
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Num:
      return a.value == b.value;
    case Expr::Kind::Sym:
      return a.name == b.name && a.primes == b.primes;
    case Expr::Kind::Pow:
      if (a.exponent != b.exponent) return false;
      break;
    default:
      break;
  }
  return a.args == b.args;
}

namespace {

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string wrap(const Expr& e, bool parens) {
  std::string s = to_string(e);
  return parens ? "(" + s + ")" : s;
}

}  // namespace

std::string to_string(const Expr& e) {
  const int p = precedence(e);
  switch (e.kind) {
    case Expr::Kind::Num:
      return e.value.get_str();
    case Expr::Kind::Sym:
      return e.name + std::string(static_cast<std::size_t>(e.primes), '\'');
    case Expr::Kind::Neg:
      return "-" + wrap(e.args[0], precedence(e.args[0]) < p);
    case Expr::Kind::Pow:
      return wrap(e.args[0], precedence(e.args[0]) <= p) + "^" + std::to_string(e.exponent);
    default:
      break;
  }
  const char* op = e.kind == Expr::Kind::Add ? " + " : e.kind == Expr::Kind::Sub ? " - " : e.kind == Expr::Kind::Mul ? "*" : "/";
  return wrap(e.args[0], precedence(e.args[0]) < p) + op + wrap(e.args[1], precedence(e.args[1]) <= p);
}

std::string to_string(const FieldDecl& f) {
  if (!f.generator) return "over Q";
  return "over Q(" + *f.generator + ": " + to_string(*f.minpoly) + ")";
}

std::string to_string(const Equation& eq) {
  std::string s = to_string(eq.lhs) + " = " + to_string(eq.rhs);
  if (eq.field) s += " " + to_string(*eq.field);
  return s;
}

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Equals, Colon, End };

struct Token {
  Tok kind;
  std::string text;
  int primes = 0;
  int column = 0;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

class Parser {
 public:
  Parser(std::string_view text, int line) : line_(line) { tokenize(text); }

  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  bool at(Tok k) const { return peek().kind == k; }

  [[noreturn]] void error(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(line_, t.column, std::move(expected), "unexpected " + describe(t));
  }

  void expect(Tok k, const std::string& what) {
    if (!at(k)) error({what});
    ++pos_;
  }

  Expr expression() {
    Expr lhs = term();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      Token op = take();
      Expr rhs = term();
      lhs = Expr::binary(op.kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub, std::move(lhs), std::move(rhs),
                         op.column);
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    while (at(Tok::Star) || at(Tok::Slash)) {
      Token op = take();
      Expr rhs = unary();
      lhs = Expr::binary(op.kind == Tok::Star ? Expr::Kind::Mul : Expr::Kind::Div, std::move(lhs), std::move(rhs),
                         op.column);
    }
    return lhs;
  }

  Expr unary() {
    if (at(Tok::Minus)) {
      Token op = take();
      return Expr::neg(unary(), op.column);
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (!at(Tok::Caret)) return base;
    Token op = take();
    if (!at(Tok::Int)) error({"integer exponent"});
    Integer n(peek().text);
    if (n > kMaxExponent) {
      throw ParseError(line_, peek().column, {"integer exponent <= 64"},
                       "exponent " + peek().text + " exceeds " + std::to_string(kMaxExponent));
    }
    take();
    return Expr::pow(std::move(base), static_cast<unsigned>(n.get_ui()), op.column);
  }

  Expr atom() {
    if (at(Tok::Int)) {
      Token t = take();
      return Expr::num(Integer(t.text), t.column);
    }
    if (at(Tok::Ident)) {
      Token t = take();
      return Expr::sym(t.text, t.primes, t.column);
    }
    if (at(Tok::LParen)) {
      take();
      Expr inner = expression();
      expect(Tok::RParen, "')'");
      return inner;
    }
    error({"integer", "identifier", "'('", "'-'"});
  }

  FieldDecl field_body() {
    if (!at(Tok::Ident) || peek().text != "Q" || peek().primes) error({"'Q'"});
    take();
    FieldDecl f;
    if (!at(Tok::LParen)) return f;
    take();
    if (!at(Tok::Ident) || peek().primes) error({"generator name"});
    f.generator = take().text;
    expect(Tok::Colon, "':'");
    f.minpoly = expression();
    expect(Tok::RParen, "')'");
    return f;
  }

  bool at_keyword(const char* kw) const { return at(Tok::Ident) && peek().text == kw && peek().primes == 0; }

  void finish() {
    if (!at(Tok::End)) error({"end of input"});
  }

 private:
  void tokenize(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
      const char c = s[i];
      const int col = static_cast<int>(i) + 1;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        toks_.push_back({Tok::Int, std::string(s.substr(i, j - i)), 0, col});
        i = j;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
        Token t{Tok::Ident, std::string(s.substr(i, j - i)), 0, col};
        while (j < s.size() && s[j] == '\'') {
          ++t.primes;
          ++j;
        }
        toks_.push_back(std::move(t));
        i = j;
        continue;
      }
      Tok k;
      switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '/': k = Tok::Slash; break;
        case '^': k = Tok::Caret; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case '=': k = Tok::Equals; break;
        case ':': k = Tok::Colon; break;
        default:
          throw ParseError(line_, col, {"expression character"},
                           "unexpected character '" + std::string(1, c) + "'");
      }
      toks_.push_back({k, std::string(1, c), 0, col});
      ++i;
    }
    toks_.push_back({Tok::End, "", 0, static_cast<int>(s.size()) + 1});
  }

  int line_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void collect(const Expr& e, std::vector<std::pair<std::string, int>>& out) {
  if (e.kind == Expr::Kind::Sym) {
    std::pair<std::string, int> key{e.name, e.primes};
    for (const auto& s : out)
      if (s == key) return;
    out.push_back(std::move(key));
  }
  for (const auto& a : e.args) collect(a, out);
}

}  // namespace

Expr parse_expression(std::string_view text, int line) {
  Parser p(text, line);
  Expr e = p.expression();
  p.finish();
  return e;
}

FieldDecl parse_field_decl(std::string_view text, int line) {
  Parser p(text, line);
  if (!p.at_keyword("over")) p.error({"'over'"});
  p.take();
  FieldDecl f = p.field_body();
  p.finish();
  return f;
}

Equation parse_equation(std::string_view text, int line) {
  Parser p(text, line);
  Equation eq;
  eq.lhs = p.expression();
  p.expect(Tok::Equals, "'='");
  eq.rhs = p.expression();
  if (p.at_keyword("over")) {
    p.take();
    eq.field = p.field_body();
  }
  p.finish();
  return eq;
}

std::vector<std::pair<std::string, int>> symbols_of(const Expr& e) {
  std::vector<std::pair<std::string, int>> out;
  collect(e, out);
  return out;
}

}  // namespace pfaffkit
