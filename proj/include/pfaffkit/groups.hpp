#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pfaffkit {

enum class AtomKind { Ga, Gm, GaxGm, SL, GL, PSL, PGL, Torus, Elliptic, Finite };

/// Structural description of an algebraic group: atoms, direct products,
/// extensions N -> G -> Q, and "some algebraic subgroup of".
class GroupExpr {
 public:
  enum class Node { Atom, Product, Extension, Subgroup };

  static GroupExpr atom(AtomKind kind, int n = 0);
  static GroupExpr product(std::vector<GroupExpr> children);
  static GroupExpr extension(GroupExpr normal, GroupExpr quotient);
  static GroupExpr subgroup_of(GroupExpr parent);

  Node node() const { return node_; }
  AtomKind atom_kind() const { return kind_; }
  /// n for SL/GL/PSL/PGL, k for Torus, 0 otherwise.
  int size() const { return n_; }
  const std::vector<GroupExpr>& children() const { return children_; }

  friend bool operator==(const GroupExpr& a, const GroupExpr& b);

 private:
  Node node_ = Node::Atom;
  AtomKind kind_ = AtomKind::Finite;
  int n_ = 0;
  std::vector<GroupExpr> children_;
};

/// Grammar text: Ga | Gm | GaxGm | SL(n) | GL(n) | PSL(n) | PGL(n) | T(k) | E
/// | Fin | Prod(g, ...) | Ext(g, g) | Sub(g).
std::string to_string(const GroupExpr& g);

/// Parses the grammar above. PGL(n) is read as PSL(n) (isomorphic over C).
GroupExpr parse_group(const std::string& text);

enum class AllowedKind { Eulerian, OneReducibleInternal, DSolvable };

struct AllowedSet {
  AllowedKind kind = AllowedKind::Eulerian;
  int d = 0;  // for DSolvable

  static AllowedSet eulerian() { return {AllowedKind::Eulerian, 0}; }
  static AllowedSet one_reducible_internal() { return {AllowedKind::OneReducibleInternal, 0}; }
  static AllowedSet d_solvable(int d);
};

std::string to_string(const AllowedSet& a);

/// Simple pieces a series can bottom out in.
enum class FactorKind { Finite, Ga, Gm, PSL, Elliptic };

struct Factor {
  FactorKind kind = FactorKind::Finite;
  int n = 0;  // for PSL

  friend bool operator==(const Factor&, const Factor&) = default;
};

std::string to_string(const Factor& f);

/// Whether `f` may occur as a quotient for the given allowed set.
bool factor_allowed(const Factor& f, const AllowedSet& allowed);

/// Smallest d with f a subquotient of GL_d (nullopt: not affine).
std::optional<int> gl_level(const Factor& f);

/// One step H ◁ G of a subnormal series with quotient G/H.
struct SeriesStep {
  std::string group;
  std::string normal;
  Factor quotient;
};

enum class Truth { Yes, No, Unknown };

std::string to_string(Truth t);

struct GroupVerdict {
  Truth truth = Truth::Unknown;
  std::vector<SeriesStep> series;  // Yes: witness series, top to bottom
  std::optional<Factor> obstruction;  // No: a non-allowed quotient
  std::string reason;
};

GroupVerdict check_series(const GroupExpr& g, const AllowedSet& allowed);

/// check_series against DSolvable(d); InvalidD for d < 1.
GroupVerdict d_solvable(const GroupExpr& g, int d);

enum class ActionSpace { Affine, Projective };

struct ActionDescriptor {
  GroupExpr group;
  ActionSpace space = ActionSpace::Affine;
  int dimension = 0;
};

/// Catalog: GL(n) on affine n-space (n) and PGL(n) on P^(n-1) (n+1).
/// Anything else raises UnknownAction.
int generic_transitivity(const ActionDescriptor& action);

struct ReducibilityProfile {
  int reducible_at = 0;
  int not_reducible_at = 0;
  std::string derivation;
};

/// Bounds for the generic solution of an order-n equation with Galois group
/// GL(n), n >= 3.
ReducibilityProfile reducibility_profile(int n);
ReducibilityProfile reducibility_profile(const GroupExpr& group);

}  // namespace pfaffkit
