#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pfaffkit/diff_poly.hpp"

namespace pfaffkit {

enum class ChainKind { Polynomial, Rational };

/// Triangular system y_i' = P_i(y_1, ..., y_i) over a base differential
/// field. Construction does not validate; call chain_validate.
class PfaffianChain {
 public:
  PfaffianChain(RingHandle ring, ChainKind kind, std::vector<DiffRatFunc> rules);

  const RingHandle& ring() const { return ring_; }
  const BaseDiffField& base() const { return ring_->base; }
  ChainKind kind() const { return kind_; }
  const std::vector<DiffRatFunc>& rules() const { return rules_; }
  std::size_t order() const { return rules_.size(); }

  friend bool operator==(const PfaffianChain& a, const PfaffianChain& b);

 private:
  RingHandle ring_;
  ChainKind kind_;
  std::vector<DiffRatFunc> rules_;
};

using ChainHandle = std::shared_ptr<const PfaffianChain>;

/// Throws TriangularityError (rule i mentions y_j, j > i) or MixedKinds
/// (a non-polynomial rule in a polynomial chain).
void chain_validate(const PfaffianChain& chain);

/// Non-triangular analogue: every rule may use every variable.
struct NoetherianSystem {
  RingHandle ring;
  std::vector<DiffPoly> rules;
};

struct ChainElement {
  ChainHandle chain;
  DiffRatFunc expr;
};

ChainElement make_element(ChainHandle chain, DiffRatFunc expr);

enum class CombineOp { Add, Mul };

ChainElement combine(const ChainElement& a, const ChainElement& b, CombineOp op);

/// D(e) = sum_i (de/dy_i) * rules_i + e^delta, for any rational e.
DiffRatFunc derive_along(const DiffRatFunc& e, std::span<const DiffRatFunc> rules);

/// Derivative of a polynomial-kind element, inside the same chain.
ChainElement total_derivative(const ChainElement& e);

/// Appends z with z' = -z^2 D(e); z represents 1/e in the extended chain.
ChainElement invert_element(const ChainElement& e);

/// The system in (y, w), w = 1/Q(y), encoding y' = P(y)/Q(y):
///   y' = w P(y),  w' = -w^3 P(y) Q'(y) - w^2 Q^delta(y).
/// P and Q live in the same one-variable ring.
NoetherianSystem rational_to_noetherian(const DiffPoly& p, const DiffPoly& q, const std::string& yname = "y",
                                        const std::string& wname = "w");

struct VerifyResult {
  bool pass = false;
  /// 1-based failing rule for backward checks, 0 otherwise.
  std::size_t index = 0;
  std::optional<DiffRatFunc> witness;
};

/// Checks D(e) = f(e) in the fraction field of the chain's ring.
VerifyResult verify_forward(const PfaffianChain& chain, const DiffRatFunc& element, const DiffRatFunc& f);

/// Checks that h_i(w) solve the rules when w' = g(w), i.e. D(h_i) = P_i(h_1..h_N).
VerifyResult verify_backward(const DiffRatFunc& g, std::span<const DiffRatFunc> assignments,
                             std::span<const DiffRatFunc> rules);
VerifyResult verify_backward(const DiffRatFunc& g, std::span<const DiffRatFunc> assignments,
                             const PfaffianChain& chain);
VerifyResult verify_backward(const DiffRatFunc& g, std::span<const DiffRatFunc> assignments,
                             const NoetherianSystem& system);

struct PresentationCandidate {
  UniPoly num;  // R
  UniPoly den;  // S
};

/// A one-rule chain b' = P(b) and the element h(b) = R(b)/S(b) that solves
/// y' = f(y).
struct PresentationCertificate {
  UniPoly r;
  UniPoly s;
  UniPoly p;
  ChainHandle chain;
  DiffRatFunc element;
};

/// Univariate polynomial over a constant base, as coefficient scalars.
UniPoly to_unipoly(const DiffPoly& p);
DiffPoly from_unipoly(const RingHandle& ring, const UniPoly& p);

/// h in {x, 1/x, x +- c, 1/(x - c), (x - c)/(x - d), x^2, 1/x^2} with c, d
/// drawn from the zeros and poles of num/den (when they split) and 0, 1.
std::vector<PresentationCandidate> presentation_catalog(const UniPoly& num, const UniPoly& den);

/// Tries each candidate h = R/S with gcd(R, S) = 1, h nonconstant and degrees
/// within `degree_bound`: P = f(h) S^2 / (R'S - RS') must be a polynomial.
/// Every returned certificate has passed verify_forward. This is a
/// semi-decision: an empty result proves nothing.
std::optional<PresentationCertificate> search_presentation(const DiffRatFunc& f,
                                                           std::span<const PresentationCandidate> extra,
                                                           int degree_bound, bool use_catalog = true);

/// Tries a single candidate; nullopt if it does not yield a polynomial P.
std::optional<PresentationCertificate> try_presentation(const DiffRatFunc& f, const PresentationCandidate& h,
                                                        int degree_bound);

}  // namespace pfaffkit
