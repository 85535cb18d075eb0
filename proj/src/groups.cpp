#include "pfaffkit/groups.hpp"

#include <cctype>

#include "pfaffkit/error.hpp"

namespace pfaffkit {

GroupExpr GroupExpr::atom(AtomKind kind, int n) {
  const bool sized = kind == AtomKind::SL || kind == AtomKind::GL || kind == AtomKind::PSL ||
                     kind == AtomKind::PGL || kind == AtomKind::Torus;
  if (sized && n < 1) fail(ErrorCode::InvalidInput, "group size must be >= 1");
  GroupExpr g;
  g.node_ = Node::Atom;
  g.kind_ = kind;
  g.n_ = sized ? n : 0;
  return g;
}

GroupExpr GroupExpr::product(std::vector<GroupExpr> children) {
  if (children.empty()) fail(ErrorCode::InvalidInput, "empty product");
  GroupExpr g;
  g.node_ = Node::Product;
  g.children_ = std::move(children);
  return g;
}

GroupExpr GroupExpr::extension(GroupExpr normal, GroupExpr quotient) {
  GroupExpr g;
  g.node_ = Node::Extension;
  g.children_ = {std::move(normal), std::move(quotient)};
  return g;
}

GroupExpr GroupExpr::subgroup_of(GroupExpr parent) {
  GroupExpr g;
  g.node_ = Node::Subgroup;
  g.children_ = {std::move(parent)};
  return g;
}

bool operator==(const GroupExpr& a, const GroupExpr& b) {
  return a.node_ == b.node_ && a.kind_ == b.kind_ && a.n_ == b.n_ && a.children_ == b.children_;
}

std::string to_string(const GroupExpr& g) {
  auto sized = [&](const char* name) { return std::string(name) + "(" + std::to_string(g.size()) + ")"; };
  switch (g.node()) {
    case GroupExpr::Node::Atom:
      switch (g.atom_kind()) {
        case AtomKind::Ga: return "Ga";
        case AtomKind::Gm: return "Gm";
        case AtomKind::GaxGm: return "GaxGm";
        case AtomKind::SL: return sized("SL");
        case AtomKind::GL: return sized("GL");
        case AtomKind::PSL: return sized("PSL");
        case AtomKind::PGL: return sized("PGL");
        case AtomKind::Torus: return sized("T");
        case AtomKind::Elliptic: return "E";
        case AtomKind::Finite: return "Fin";
      }
      break;
    case GroupExpr::Node::Product: {
      std::string s = "Prod(";
      for (std::size_t i = 0; i < g.children().size(); ++i) s += (i ? ", " : "") + to_string(g.children()[i]);
      return s + ")";
    }
    case GroupExpr::Node::Extension:
      return "Ext(" + to_string(g.children()[0]) + ", " + to_string(g.children()[1]) + ")";
    case GroupExpr::Node::Subgroup:
      return "Sub(" + to_string(g.children()[0]) + ")";
  }
  return "?";
}

namespace {

class GroupParser {
 public:
  explicit GroupParser(const std::string& text) : s_(text) {}

  GroupExpr parse_all() {
    GroupExpr g = parse();
    skip();
    if (pos_ != s_.size()) error({"end of input"}, "trailing input");
    return g;
  }

 private:
  [[noreturn]] void error(std::vector<std::string> expected, const std::string& what) const {
    throw ParseError(1, static_cast<int>(pos_) + 1, std::move(expected), what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) error({std::string("'") + c + "'"}, "unexpected input");
    ++pos_;
  }

  int integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error({"integer"}, "expected an integer");
    if (pos_ - start > 6) error({"integer"}, "integer too large");
    int v = std::stoi(s_.substr(start, pos_ - start));
    if (v < 1) {
      pos_ = start;
      error({"positive integer"}, "size must be >= 1");
    }
    return v;
  }

  std::string word() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  GroupExpr sized(AtomKind kind) {
    expect('(');
    int n = integer();
    expect(')');
    return GroupExpr::atom(kind, n);
  }

  GroupExpr parse() {
    skip();
    const std::size_t start = pos_;
    const std::string w = word();
    if (w == "Ga") return GroupExpr::atom(AtomKind::Ga);
    if (w == "Gm") return GroupExpr::atom(AtomKind::Gm);
    if (w == "GaxGm") return GroupExpr::atom(AtomKind::GaxGm);
    if (w == "E" || w == "Elliptic") return GroupExpr::atom(AtomKind::Elliptic);
    if (w == "Fin" || w == "Finite") return GroupExpr::atom(AtomKind::Finite);
    if (w == "SL") return sized(AtomKind::SL);
    if (w == "GL") return sized(AtomKind::GL);
    if (w == "PSL") return sized(AtomKind::PSL);
    if (w == "PGL") {
      GroupExpr g = sized(AtomKind::PSL);
      return g;
    }
    if (w == "T" || w == "Torus") return sized(AtomKind::Torus);
    if (w == "Prod") {
      expect('(');
      std::vector<GroupExpr> kids{parse()};
      skip();
      while (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        kids.push_back(parse());
        skip();
      }
      expect(')');
      return GroupExpr::product(std::move(kids));
    }
    if (w == "Ext") {
      expect('(');
      GroupExpr n = parse();
      expect(',');
      GroupExpr q = parse();
      expect(')');
      return GroupExpr::extension(std::move(n), std::move(q));
    }
    if (w == "Sub") {
      expect('(');
      GroupExpr p = parse();
      expect(')');
      return GroupExpr::subgroup_of(std::move(p));
    }
    pos_ = start;
    error({"Ga", "Gm", "GaxGm", "SL(n)", "GL(n)", "PSL(n)", "PGL(n)", "T(k)", "E", "Fin", "Prod(...)", "Ext(g, g)",
           "Sub(g)"},
          "unknown group");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupExpr parse_group(const std::string& text) { return GroupParser(text).parse_all(); }

AllowedSet AllowedSet::d_solvable(int d) {
  if (d < 1) fail(ErrorCode::InvalidD, "d must be >= 1");
  return {AllowedKind::DSolvable, d};
}

std::string to_string(const AllowedSet& a) {
  switch (a.kind) {
    case AllowedKind::Eulerian: return "eulerian";
    case AllowedKind::OneReducibleInternal: return "1-reducible";
    case AllowedKind::DSolvable: return "d-solvable:" + std::to_string(a.d);
  }
  return "?";
}

std::string to_string(const Factor& f) {
  switch (f.kind) {
    case FactorKind::Finite: return "Fin";
    case FactorKind::Ga: return "Ga";
    case FactorKind::Gm: return "Gm";
    case FactorKind::PSL: return "PSL(" + std::to_string(f.n) + ")";
    case FactorKind::Elliptic: return "E";
  }
  return "?";
}

std::string to_string(Truth t) {
  switch (t) {
    case Truth::Yes: return "yes";
    case Truth::No: return "no";
    case Truth::Unknown: return "unknown";
  }
  return "unknown";
}

// Least d with the factor a subquotient of GL_d. Elliptic curves never are.
std::optional<int> gl_level(const Factor& f) {
  switch (f.kind) {
    case FactorKind::Finite: return 0;
    case FactorKind::Gm: return 1;
    case FactorKind::Ga: return 2;
    case FactorKind::PSL: return f.n;
    case FactorKind::Elliptic: return std::nullopt;
  }
  return std::nullopt;
}

bool factor_allowed(const Factor& f, const AllowedSet& allowed) {
  switch (allowed.kind) {
    case AllowedKind::Eulerian:
    case AllowedKind::OneReducibleInternal:
      if (f.kind == FactorKind::Elliptic) return allowed.kind == AllowedKind::OneReducibleInternal;
      return f.kind != FactorKind::PSL || f.n == 2;
    case AllowedKind::DSolvable: {
      auto level = gl_level(f);
      return level && *level <= allowed.d;
    }
  }
  return false;
}

namespace {

// Composition-type series of an atom, top to bottom.
std::vector<SeriesStep> atom_series(const GroupExpr& g) {
  const int n = g.size();
  const std::string name = to_string(g);
  switch (g.atom_kind()) {
    case AtomKind::Finite: return {{name, "1", {FactorKind::Finite, 0}}};
    case AtomKind::Ga: return {{name, "1", {FactorKind::Ga, 0}}};
    case AtomKind::Gm: return {{name, "1", {FactorKind::Gm, 0}}};
    case AtomKind::GaxGm: return {{name, "Ga", {FactorKind::Gm, 0}}, {"Ga", "1", {FactorKind::Ga, 0}}};
    case AtomKind::Elliptic: return {{name, "1", {FactorKind::Elliptic, 0}}};
    case AtomKind::Torus: {
      std::vector<SeriesStep> out;
      for (int k = n; k >= 1; --k)
        out.push_back({"T(" + std::to_string(k) + ")", k > 1 ? "T(" + std::to_string(k - 1) + ")" : "1",
                       {FactorKind::Gm, 0}});
      return out;
    }
    case AtomKind::SL: {
      // center mu_n is finite; SL(n)/mu_n = PSL(n)
      if (n == 1) return {{name, "1", {FactorKind::Finite, 0}}};
      return {{name, "Fin", {FactorKind::PSL, n}}, {"Fin", "1", {FactorKind::Finite, 0}}};
    }
    case AtomKind::GL: {
      if (n == 1) return {{name, "1", {FactorKind::Gm, 0}}};
      std::vector<SeriesStep> out{{name, "SL(" + std::to_string(n) + ")", {FactorKind::Gm, 0}}};
      auto rest = atom_series(GroupExpr::atom(AtomKind::SL, n));
      out.insert(out.end(), rest.begin(), rest.end());
      return out;
    }
    case AtomKind::PSL:
    case AtomKind::PGL:
      // PGL(n) = PSL(n) over C
      if (n == 1) return {{name, "1", {FactorKind::Finite, 0}}};
      return {{name, "1", {FactorKind::PSL, n}}};
  }
  return {};
}

bool goursat_atom(const GroupExpr& g) {
  if (g.node() == GroupExpr::Node::Product) {
    for (const auto& c : g.children())
      if (!goursat_atom(c)) return false;
    return true;
  }
  if (g.node() != GroupExpr::Node::Atom) return false;
  switch (g.atom_kind()) {
    case AtomKind::Ga:
    case AtomKind::Gm:
    case AtomKind::GaxGm:
    case AtomKind::Torus:
    case AtomKind::Finite: return true;
    case AtomKind::SL:
    case AtomKind::PSL:
    case AtomKind::PGL: return g.size() == 2;
    default: return false;
  }
}

bool contains_eulerian(const AllowedSet& a) {
  return a.kind != AllowedKind::DSolvable || a.d >= 2;
}

void prefix_steps(std::vector<SeriesStep>& steps, const std::string& before, const std::string& after) {
  for (auto& s : steps) {
    s.group = before + s.group + after;
    s.normal = before + s.normal + after;
  }
}

void name_top(GroupVerdict& v, const GroupExpr& g) {
  if (!v.series.empty()) v.series.front().group = to_string(g);
}

GroupVerdict combine_children(std::vector<GroupVerdict> kids, const std::string& what) {
  GroupVerdict out;
  for (auto& k : kids) {
    if (k.truth == Truth::No) {
      out.truth = Truth::No;
      out.obstruction = k.obstruction;
      out.reason = k.reason;
      return out;
    }
  }
  for (auto& k : kids) {
    if (k.truth == Truth::Unknown) {
      out.truth = Truth::Unknown;
      out.reason = what + ": " + k.reason;
      return out;
    }
  }
  out.truth = Truth::Yes;
  return out;
}

}  // namespace

GroupVerdict check_series(const GroupExpr& g, const AllowedSet& allowed) {
  switch (g.node()) {
    case GroupExpr::Node::Atom: {
      GroupVerdict v;
      v.series = atom_series(g);
      for (const auto& step : v.series) {
        if (!factor_allowed(step.quotient, allowed)) {
          v.truth = Truth::No;
          v.obstruction = step.quotient;
          v.reason = to_string(g) + " has quotient " + to_string(step.quotient) + ", not allowed for " +
                     to_string(allowed);
          v.series.clear();
          return v;
        }
      }
      v.truth = Truth::Yes;
      return v;
    }
    case GroupExpr::Node::Product: {
      std::vector<GroupVerdict> kids;
      for (const auto& c : g.children()) kids.push_back(check_series(c, allowed));
      GroupVerdict out = combine_children(kids, "product factor");
      if (out.truth != Truth::Yes) return out;
      // G1 x ... x Gk, peeled one factor at a time.
      const auto& ch = g.children();
      std::string done;
      for (std::size_t i = 0; i < ch.size(); ++i) {
        std::string rest;
        for (std::size_t j = i + 1; j < ch.size(); ++j) rest += " x " + to_string(ch[j]);
        auto steps = kids[i].series;
        prefix_steps(steps, done, rest);
        out.series.insert(out.series.end(), steps.begin(), steps.end());
        done += "1 x ";
      }
      name_top(out, g);
      return out;
    }
    case GroupExpr::Node::Extension: {
      std::vector<GroupVerdict> kids{check_series(g.children()[0], allowed), check_series(g.children()[1], allowed)};
      GroupVerdict out = combine_children(kids, "extension");
      if (out.truth != Truth::Yes) return out;
      // Lift the quotient's series through the projection, then the kernel's.
      auto top = kids[1].series;
      const std::string n = to_string(g.children()[0]), q = to_string(g.children()[1]);
      auto lift = [&](const std::string& name) {
        if (name == "1") return n;
        return name == q ? to_string(g) : "preimage of " + name;
      };
      for (auto& s : top) {
        s.group = lift(s.group);
        s.normal = lift(s.normal);
      }
      out.series = top;
      out.series.insert(out.series.end(), kids[0].series.begin(), kids[0].series.end());
      return out;
    }
    case GroupExpr::Node::Subgroup: {
      const GroupExpr& parent = g.children()[0];
      GroupVerdict out;
      if (contains_eulerian(allowed) && goursat_atom(parent)) {
        GroupVerdict p = check_series(parent, allowed);
        if (p.truth == Truth::Yes) {
          out.truth = Truth::Yes;
          out.series = p.series;
          prefix_steps(out.series, "H n (", ")");
          name_top(out, g);
          out.reason = "algebraic subgroups of products of Ga, Gm, SL(2)-type and finite groups are eulerian (Goursat)";
          return out;
        }
      }
      out.truth = Truth::Unknown;
      out.reason = "subgroup of " + to_string(parent) + " is not determined structurally";
      return out;
    }
  }
  return {};
}

GroupVerdict d_solvable(const GroupExpr& g, int d) { return check_series(g, AllowedSet::d_solvable(d)); }

int generic_transitivity(const ActionDescriptor& action) {
  const GroupExpr& g = action.group;
  if (g.node() == GroupExpr::Node::Atom) {
    const int n = g.size();
    if (g.atom_kind() == AtomKind::GL && action.space == ActionSpace::Affine && action.dimension == n) return n;
    if ((g.atom_kind() == AtomKind::PGL || g.atom_kind() == AtomKind::PSL) && n >= 2 &&
        action.space == ActionSpace::Projective && action.dimension == n - 1)
      return n + 1;
  }
  fail(ErrorCode::UnknownAction, "no catalog entry for " + to_string(g));
}

ReducibilityProfile reducibility_profile(int n) {
  if (n < 3) fail(ErrorCode::InvalidN, "n must be >= 3");
  ReducibilityProfile out;
  const int transitivity = generic_transitivity({GroupExpr::atom(AtomKind::PGL, n), ActionSpace::Projective, n - 1});
  out.not_reducible_at = transitivity - 3;
  out.reducible_at = n - 1;
  out.derivation = "u = y'/y maps solutions onto an order " + std::to_string(n - 1) +
                   " equation with fibres of dimension 1, so the generic solution is " +
                   std::to_string(n - 1) + "-reducible; the image has group PGL(" + std::to_string(n) +
                   ") acting on P^" + std::to_string(n - 1) + " generically " + std::to_string(transitivity) +
                   "-transitively, and d + 3 <= " + std::to_string(transitivity) + " rules out d = " +
                   std::to_string(out.not_reducible_at);
  return out;
}

ReducibilityProfile reducibility_profile(const GroupExpr& group) {
  if (group.node() != GroupExpr::Node::Atom || group.atom_kind() != AtomKind::GL)
    fail(ErrorCode::InvalidInput, "reducibility profile is known for GL(n) only");
  return reducibility_profile(group.size());
}

}  // namespace pfaffkit
