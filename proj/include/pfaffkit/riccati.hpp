#pragma once

#include <vector>

#include "pfaffkit/diff_poly.hpp"

namespace pfaffkit {

/// Differential polynomial in one indeterminate u and its derivatives,
/// stored as a DiffPoly over the variables u, u', ..., u^(order).
struct DiffIndeterminateExpr {
  DiffPoly poly;
  int order = 0;  // highest derivative the ring carries
};

/// Ring with variables u, u', ..., u^(max_order) over `base`.
RingHandle indeterminate_ring(const BaseDiffField& base, int max_order, const std::string& name = "u");

/// Formal total derivative: u^(j) -> u^(j+1), coefficients by delta.
/// The result must stay inside the ring (the top derivative must not occur).
DiffPoly formal_derivative(const DiffPoly& p);

/// Highest derivative of u actually occurring, or -1 for a constant.
int differential_order(const DiffPoly& p);

/// For y^(n) + a_{n-1} y^(n-1) + ... + a_0 y = 0 with coefficients a_0..a_n
/// (a_n = 1), returns sum a_k r_k(u) with r_0 = 1, r_{k+1} = D r_k + u r_k:
/// the equation satisfied by u = y'/y.
DiffIndeterminateExpr riccati_reduce(const BaseDiffField& base, const std::vector<KtElement>& coeffs);

}  // namespace pfaffkit
