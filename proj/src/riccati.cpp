#include "pfaffkit/riccati.hpp"

namespace pfaffkit {

RingHandle indeterminate_ring(const BaseDiffField& base, int max_order, const std::string& name) {
  std::vector<std::string> vars;
  for (int j = 0; j <= max_order; ++j) vars.push_back(name + std::string(static_cast<std::size_t>(j), '\''));
  return make_ring(base, std::move(vars));
}

DiffPoly formal_derivative(const DiffPoly& p) {
  const std::size_t n = p.nvars();
  DiffPoly r = coeff_derivation(p);
  for (std::size_t j = 0; j < n; ++j) {
    if (!p.mentions(j)) continue;
    if (j + 1 >= n) fail(ErrorCode::InvalidInput, "derivative leaves the indeterminate ring");
    r += partial_derivative(p, j) * DiffPoly::variable(p.ring(), j + 1);
  }
  return r;
}

int differential_order(const DiffPoly& p) {
  for (std::size_t j = p.nvars(); j-- > 0;)
    if (p.mentions(j)) return static_cast<int>(j);
  return -1;
}

DiffIndeterminateExpr riccati_reduce(const BaseDiffField& base, const std::vector<KtElement>& coeffs) {
  if (coeffs.size() < 2) fail(ErrorCode::InvalidInput, "linear equation needs order >= 1");
  if (!(coeffs.back() == KtElement(1L))) fail(ErrorCode::NotMonic, "leading coefficient must be 1");
  const int n = static_cast<int>(coeffs.size()) - 1;
  RingHandle ring = indeterminate_ring(base, n - 1);
  const DiffPoly u = DiffPoly::variable(ring, 0);
  DiffPoly r = DiffPoly::constant(ring, KtElement(1L));
  DiffPoly total = r.scaled(coeffs[0]);
  for (int k = 1; k <= n; ++k) {
    r = formal_derivative(r) + u * r;
    total += r.scaled(coeffs[static_cast<std::size_t>(k)]);
  }
  return {total, n - 1};
}

}  // namespace pfaffkit
