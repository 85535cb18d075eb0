#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfaffkit/chains.hpp"
#include "pfaffkit/groups.hpp"
#include "pfaffkit/riccati.hpp"

namespace pfaffkit {

/// f = c * prod (x - alpha_i)^{n_i} / prod (x - beta_j)^{m_j} with every
/// alpha different from every beta.
struct FactoredRatFunc {
  AlgebraicScalar leading;
  std::vector<LinearFactor> zeros;
  std::vector<LinearFactor> poles;

  int zero_count() const;  // n, with multiplicity
  int pole_count() const;  // m, with multiplicity
};

/// Merges repeated roots and cancels common zeros and poles; rejects c = 0.
FactoredRatFunc make_factored(AlgebraicScalar leading, std::vector<LinearFactor> zeros,
                              std::vector<LinearFactor> poles);

UniPoly zeros_poly(const FactoredRatFunc& f);  // monic prod (x - alpha)
UniPoly poles_poly(const FactoredRatFunc& f);  // monic prod (x - beta)
DiffRatFunc to_diff_ratfunc(const FactoredRatFunc& f, const RingHandle& ring);

/// Splits numerator and denominator of a univariate f over a constant base.
std::optional<FactoredRatFunc> factor_ratfunc(const DiffRatFunc& f);

std::string to_string(const FactoredRatFunc& f, const std::string& var = "x");

struct ResiduePoint {
  AlgebraicScalar pole;
  int order = 1;
  /// Present for simple poles only.
  std::optional<AlgebraicScalar> residue;
};

/// Residues of the 1-form dx/f: the poles are the zeros of f.
struct ResidueData {
  std::vector<ResiduePoint> finite;
  AlgebraicScalar at_infinity;
  /// False when some higher-order pole carries no residue.
  bool complete = true;
};

/// Simple zeros get Res = prod_j (a_k - b_j)^{m_j} / (c prod_{i != k} (a_k - a_i)^{n_i}).
/// The residue at infinity is read off the division B = q A + r as
/// -[x^{n-1}] r / c (A = zeros_poly, B = poles_poly), independently of the
/// finite residues. With allow_multiple = false a repeated zero raises
/// ZeroDenominatorData.
ResidueData residues_of_inverse(const FactoredRatFunc& f, bool allow_multiple = true);

struct Finding {
  Truth truth = Truth::Unknown;
  std::string reason;
};

/// Sufficient test: at least two simple poles of dx/f and no two residues a
/// rational multiple of each other. Yes or Unknown, never No.
Finding strict_disintegration_test(const FactoredRatFunc& f);

/// Two distinct pole locations, or 0 < m < n - 2.
bool degree_criterion(const FactoredRatFunc& f);

/// No (not Pfaffian) when the degree criterion holds and the
/// disintegration test says Yes; Unknown otherwise.
Finding not_pfaffian_by_degree_theorem(const FactoredRatFunc& f);

struct Verdict {
  Truth pfaffian = Truth::Unknown;
  Truth rationally_pfaffian = Truth::Unknown;
  std::string criterion;
  std::string reason;
  /// Pfaffian = Yes via a polynomial right-hand side.
  ChainHandle chain;
  std::optional<DiffRatFunc> element;
  /// Pfaffian = Yes via presentation search.
  std::optional<PresentationCertificate> certificate;
  /// Rationally Pfaffian certificates.
  ChainHandle rational_chain;
  std::optional<NoetherianSystem> noetherian;
  std::optional<FactoredRatFunc> factored;
  std::optional<ResidueData> residues;
  Truth one_reducible = Truth::Unknown;
  std::vector<std::string> notes;
};

/// (y')^2 = 4y^3 - g2 y - g3; DegenerateCurve when 27 g3^2 - g2^3 = 0.
Verdict weierstrass_check(const AlgebraicScalar& g2, const AlgebraicScalar& g3);

struct ClassifyOptions {
  /// Use this factorization instead of searching for one.
  std::optional<FactoredRatFunc> factored;
  std::vector<PresentationCandidate> candidates;
  int degree_bound = 3;
};

/// y' = f(y): rationally Pfaffian always, Pfaffian for polynomial f, and
/// otherwise the degree theorem and the presentation search, first definite
/// answer wins. A contradiction between them raises InternalInvariant.
Verdict classify_order_one(const DiffRatFunc& f, const ClassifyOptions& options = {});

struct LinearReport {
  DiffIndeterminateExpr logderiv_reduction;
  GroupVerdict eulerian;
  Truth pfaffian = Truth::Unknown;
  std::optional<int> min_solvability_d;
  std::optional<ReducibilityProfile> reducibility;
  std::vector<std::string> notes;
};

/// Monic L with coefficients a_0..a_n (a_n = 1) and its declared Galois group.
LinearReport classify_linear(const BaseDiffField& base, const std::vector<KtElement>& coeffs,
                             const GroupExpr& declared_group);

}  // namespace pfaffkit
