#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace testkit;

namespace {

AlgebraicScalar r2(Rational a, Rational b) { return AlgebraicScalar(sqrt2(), {std::move(a), std::move(b)}); }

FactoredRatFunc simple(AlgebraicScalar c, const std::vector<AlgebraicScalar>& zeros,
                       const std::vector<AlgebraicScalar>& poles) {
  std::vector<LinearFactor> z, p;
  for (const auto& a : zeros) z.push_back({a, 1});
  for (const auto& b : poles) p.push_back({b, 1});
  return make_factored(std::move(c), std::move(z), std::move(p));
}

// (x - a)(x - b)/(x(x - 1))
FactoredRatFunc family(const AlgebraicScalar& a, const AlgebraicScalar& b) {
  return simple(AlgebraicScalar(1L), {a, b}, {AlgebraicScalar(0L), AlgebraicScalar(1L)});
}

AlgebraicScalar residue_sum(const ResidueData& r) {
  AlgebraicScalar s = r.at_infinity;
  for (const auto& p : r.finite) s += *p.residue;
  return s;
}

}  // namespace

TEST_CASE("residues of dx/f: examples") {
  // a(a - 1)/(a - b) and b(b - 1)/(b - a) for a = 5, b = 7
  const ResidueData ab = residues_of_inverse(family(AlgebraicScalar(5L), AlgebraicScalar(7L)));
  REQUIRE(ab.finite.size() == 2);
  CHECK(*ab.finite[0].residue == AlgebraicScalar(Rational(-10)));
  CHECK(*ab.finite[1].residue == AlgebraicScalar(Rational(21)));

  const ResidueData x = residues_of_inverse(simple(AlgebraicScalar(1L), {AlgebraicScalar(0L)}, {}));
  REQUIRE(x.finite.size() == 1);
  CHECK(*x.finite[0].residue == AlgebraicScalar(1L));

  const ResidueData pm = residues_of_inverse(simple(AlgebraicScalar(1L), {AlgebraicScalar(1L), AlgebraicScalar(-1L)}, {}));
  CHECK(*pm.finite[0].residue == AlgebraicScalar(Rational(1, 2)));
  CHECK(*pm.finite[1].residue == AlgebraicScalar(Rational(-1, 2)));
  CHECK(residue_sum(pm).is_zero());

  const ResidueData rep = residues_of_inverse(make_factored(AlgebraicScalar(1L), {{AlgebraicScalar(2L), 2}}, {}));
  CHECK_FALSE(rep.complete);
  CHECK(rep.finite[0].order == 2);
  CHECK_FALSE(rep.finite[0].residue.has_value());
  try {
    residues_of_inverse(make_factored(AlgebraicScalar(1L), {{AlgebraicScalar(2L), 2}}, {}), false);
    FAIL("expected ZeroDenominatorData");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroDenominatorData);
  }
}

TEST_CASE("closed-form residues match the partial-fraction solve") {
  Rng rng(404);
  for (const FieldHandle& field : {FieldHandle(), sqrt2(), cbrt2()}) {
    for (int i = 0; i < 200; ++i) {
      const FactoredRatFunc f = rand_factored(rng, field);
      CAPTURE(to_string(f));
      const ResidueData r = residues_of_inverse(f);
      const auto oracle = partial_fraction_residues(f);
      REQUIRE(r.finite.size() == oracle.size());
      for (std::size_t k = 0; k < oracle.size(); ++k) REQUIRE(*r.finite[k].residue == oracle[k]);
      REQUIRE(residue_sum(r).is_zero());
    }
  }
}

TEST_CASE("residues refute the (2, 1 + r) family member") {
  const FactoredRatFunc f = family(AlgebraicScalar(2L), r2(1, 1));
  const ResidueData r = residues_of_inverse(f);
  CHECK(*r.finite[0].residue == r2(-2, -2));
  CHECK(*r.finite[1].residue == r2(4, 3));
  CHECK(r.at_infinity == r2(-2, -1));
  CHECK(degree_criterion(f));
  CHECK(strict_disintegration_test(f).truth == Truth::Yes);
  CHECK(not_pfaffian_by_degree_theorem(f).truth == Truth::No);

  const FactoredRatFunc g = family(AlgebraicScalar(2L), AlgebraicScalar(3L));
  CHECK(degree_criterion(g));
  CHECK(strict_disintegration_test(g).truth == Truth::Unknown);
  CHECK(not_pfaffian_by_degree_theorem(g).truth == Truth::Unknown);
}

TEST_CASE("four-zero family") {
  const AlgebraicScalar th = AlgebraicScalar::generator(sqrt2());
  const FactoredRatFunc f = simple(AlgebraicScalar(1L), {AlgebraicScalar(1L), AlgebraicScalar(2L), AlgebraicScalar(3L), th},
                                   {AlgebraicScalar(0L)});
  CHECK(f.zero_count() == 4);
  CHECK(f.pole_count() == 1);
  CHECK(degree_criterion(f));
  const ResidueData r = residues_of_inverse(f);
  REQUIRE(r.finite.size() == 4);
  CHECK(*r.finite[0].residue == r2(Rational(-1, 2), Rational(-1, 2)));
  CHECK(*r.finite[1].residue == r2(-2, -1));
  CHECK(*r.finite[2].residue == r2(Rational(9, 14), Rational(3, 14)));
  CHECK(*r.finite[3].residue == r2(Rational(13, 7), Rational(9, 7)));
  CHECK(r.at_infinity.is_zero());
  CHECK(not_pfaffian_by_degree_theorem(f).truth == Truth::No);
}

TEST_CASE("degree criterion") {
  const AlgebraicScalar one(1L), two(2L);
  CHECK(degree_criterion(family(AlgebraicScalar(5L), AlgebraicScalar(7L))));
  CHECK(degree_criterion(simple(one, {one, two, AlgebraicScalar(3L), AlgebraicScalar(4L)}, {AlgebraicScalar(0L)})));
  CHECK_FALSE(degree_criterion(simple(AlgebraicScalar(Rational(1, 2)), {}, {AlgebraicScalar(0L)})));
  // a repeated pole is one location: m = 2, n = 5 gives 0 < 2 < 3
  CHECK(degree_criterion(make_factored(one, {{one, 1}, {two, 1}, {AlgebraicScalar(3L), 1}, {AlgebraicScalar(4L), 1}, {AlgebraicScalar(5L), 1}},
                                       {{AlgebraicScalar(0L), 2}})));
  CHECK_FALSE(degree_criterion(make_factored(one, {{one, 1}, {two, 1}}, {{AlgebraicScalar(0L), 2}})));
  CHECK(strict_disintegration_test(simple(one, {AlgebraicScalar(0L)}, {})).truth == Truth::Unknown);
}

TEST_CASE("make_factored normalizes its input") {
  const AlgebraicScalar one(1L), two(2L);
  const FactoredRatFunc f = make_factored(AlgebraicScalar(3L), {{one, 1}, {one, 1}, {two, 1}}, {{two, 1}});
  CHECK(f.zero_count() == 2);
  CHECK(f.pole_count() == 0);
  CHECK(to_string(f, "y") == "3*(y - 1)^2");
  try {
    make_factored(AlgebraicScalar(0L), {}, {});
    FAIL("expected InvalidInput");
  } catch (const Error&) {
  }
}

TEST_CASE("weierstrass_check") {
  const Verdict a = weierstrass_check(AlgebraicScalar(0L), AlgebraicScalar(1L));
  CHECK(a.pfaffian == Truth::No);
  CHECK(a.one_reducible == Truth::Yes);
  const Verdict b = weierstrass_check(AlgebraicScalar(4L), AlgebraicScalar(1L));
  CHECK(b.pfaffian == Truth::No);
  CHECK(b.one_reducible == Truth::Yes);
  try {
    weierstrass_check(AlgebraicScalar(3L), AlgebraicScalar(1L));
    FAIL("expected DegenerateCurve");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateCurve);
  }

  const GroupExpr e = GroupExpr::atom(AtomKind::Elliptic);
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const AlgebraicScalar g2 = rand_scalar(rng, sqrt2()), g3 = rand_scalar(rng, sqrt2());
    if ((AlgebraicScalar(27L) * g3 * g3 - g2 * g2 * g2).is_zero()) continue;
    const Verdict v = weierstrass_check(g2, g3);
    REQUIRE(v.pfaffian == check_series(e, AllowedSet::eulerian()).truth);
    REQUIRE(v.one_reducible == check_series(e, AllowedSet::one_reducible_internal()).truth);
  }
}

TEST_CASE("classify_order_one") {
  const RingHandle yt = qt_ring({"y"});
  const Verdict poly = classify_order_one(rf(yt, "y^2 + t*y"));
  CHECK(poly.pfaffian == Truth::Yes);
  REQUIRE(poly.chain);
  CHECK(poly.chain->rules()[0] == rf(poly.chain->ring(), poly.chain->ring()->vars[0] + "^2 + t*" + poly.chain->ring()->vars[0]));
  CHECK(poly.rationally_pfaffian == Truth::Yes);

  const RingHandle y = const_ring({"y"});
  const Verdict sq = classify_order_one(rf(y, "1/(2*y)"));
  CHECK(sq.pfaffian == Truth::Yes);
  REQUIRE(sq.certificate.has_value());
  CHECK(to_string(sq.certificate->p, "x") == "-1/2*x^3");
  CHECK(verify_forward(*sq.certificate->chain, sq.certificate->element, rf(y, "1/(2*y)")).pass);

  const RingHandle yr = const_ring({"y"}, sqrt2());
  const DiffRatFunc fb = rf(yr, "(y - 2)*(y - (1 + r))/(y*(y - 1))");
  const Verdict b = classify_order_one(fb);
  CHECK(b.pfaffian == Truth::No);
  CHECK(b.rationally_pfaffian == Truth::Yes);
  CHECK(b.criterion == "degree+disintegration");
  REQUIRE(b.noetherian.has_value());
  const std::vector<DiffRatFunc> values = {rf(yr, "y"), rf(yr, "1/(y*(y - 1))")};
  CHECK(verify_backward(fb, values, *b.noetherian).pass);

  const Verdict u = classify_order_one(rf(yr, "(y - 2)*(y - 3)/(y*(y - 1))"));
  CHECK(u.pfaffian == Truth::Unknown);
  CHECK(u.rationally_pfaffian == Truth::Yes);

  CHECK(classify_order_one(rf(yt, "t/y")).pfaffian == Truth::Unknown);
}

TEST_CASE("classify_order_one certificates always verify") {
  Rng rng(8);
  for (const FieldHandle& field : {FieldHandle(), sqrt2()}) {
    const RingHandle y = const_ring({"y"}, field);
    for (int i = 0; i < 40; ++i) {
      const FactoredRatFunc f = rand_factored(rng, field);
      const DiffRatFunc rhs = to_diff_ratfunc(f, y);
      REQUIRE(rf(y, to_string(f, "y")) == rhs);
      ClassifyOptions opts;
      opts.factored = f;
      const Verdict v = classify_order_one(rhs, opts);
      REQUIRE(v.rationally_pfaffian == Truth::Yes);
      REQUIRE(v.noetherian.has_value());
      const std::vector<DiffRatFunc> values = {rf(y, "y"), DiffRatFunc(rhs.den()).inverse()};
      REQUIRE(verify_backward(rhs, values, *v.noetherian).pass);
      if (v.certificate) REQUIRE(verify_forward(*v.certificate->chain, v.certificate->element, rhs).pass);
      if (v.pfaffian == Truth::No) REQUIRE_FALSE(search_presentation(rhs, {}, 3).has_value());
    }
  }
}

TEST_CASE("classify_linear") {
  const BaseDiffField qt = BaseDiffField::rational_functions({});
  const KtElement t = qt.t();
  const RingHandle u3 = indeterminate_ring(qt, 2);

  const LinearReport sl3 = classify_linear(qt, {-t, KtElement(0L), KtElement(0L), KtElement(1L)}, parse_group("SL(3)"));
  CHECK(sl3.pfaffian == Truth::No);
  CHECK(sl3.logderiv_reduction.poly == dp(u3, "u'' + 3*u*u' + u^3 - t"));
  CHECK(sl3.min_solvability_d == 3);

  const LinearReport airy = classify_linear(qt, {-t, KtElement(0L), KtElement(1L)}, parse_group("SL(2)"));
  CHECK(airy.pfaffian == Truth::Yes);
  CHECK(airy.eulerian.truth == Truth::Yes);
  CHECK(airy.min_solvability_d == 2);

  const LinearReport gl4 = classify_linear(qt, {t, KtElement(0L), KtElement(0L), KtElement(0L), KtElement(1L)}, parse_group("GL(4)"));
  REQUIRE(gl4.reducibility.has_value());
  CHECK(gl4.reducibility->reducible_at == 3);
  CHECK(gl4.reducibility->not_reducible_at == 2);
  CHECK(gl4.min_solvability_d == 4);

  const LinearReport ell = classify_linear(qt, {-t, KtElement(0L), KtElement(1L)}, parse_group("E"));
  CHECK(ell.pfaffian == Truth::No);
  CHECK_FALSE(ell.min_solvability_d.has_value());

  try {
    classify_linear(qt, {t, KtElement(3L)}, parse_group("Gm"));
    FAIL("expected NotMonic");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMonic);
  }
}

TEST_CASE("classify_linear pfaffian follows the eulerian verdict") {
  const BaseDiffField qt = BaseDiffField::rational_functions({});
  const std::vector<KtElement> coeffs = {qt.t(), KtElement(0L), KtElement(1L)};
  for (const auto& g : groups_depth2()) {
    const LinearReport r = classify_linear(qt, coeffs, g);
    REQUIRE(r.pfaffian == check_series(g, AllowedSet::eulerian()).truth);
  }
}
