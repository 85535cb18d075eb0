#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace testkit;

namespace {

AlgebraicScalar r2(long a, long b) { return AlgebraicScalar(sqrt2(), {Rational(a), Rational(b)}); }

UniPoly poly(std::initializer_list<long> c) {
  std::vector<AlgebraicScalar> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(v);
}

void expect_code(ErrorCode code, auto&& fn) {
  try {
    fn();
    FAIL("expected " << to_string(code));
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

}  // namespace

TEST_CASE("rationals stay canonical") {
  CHECK(make_rational(4, -6) == Rational(-2, 3));
  CHECK(make_rational(4, -6).get_den() == 3);
  CHECK(parse_rational("10/4") == Rational(5, 2));
  CHECK(to_string(Rational(-7, 3)) == "-7/3");
  CHECK(rational_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK_FALSE(rational_sqrt(Rational(2)).has_value());
  expect_code(ErrorCode::DivisionByZero, [] { make_rational(1, 0); });
}

TEST_CASE("nf_new validates the minimal polynomial") {
  auto f = nf_new(RationalPoly({Rational(-2), Rational(0), Rational(1)}));
  CHECK(f->degree() == 2);
  CHECK(f->status() == Irreducibility::Verified);
  auto c = nf_new(RationalPoly({Rational(-2), Rational(0), Rational(0), Rational(1)}));
  CHECK(c->degree() == 3);
  CHECK(c->status() == Irreducibility::Verified);
  auto q = nf_new(RationalPoly({Rational(2), Rational(0), Rational(0), Rational(0), Rational(1)}));
  CHECK(q->status() == Irreducibility::Asserted);

  expect_code(ErrorCode::ReduciblePolynomial, [] { nf_new(RationalPoly({Rational(-1), Rational(0), Rational(1)})); });
  expect_code(ErrorCode::ReduciblePolynomial, [] { nf_new(RationalPoly({Rational(0), Rational(0), Rational(1)})); });
  expect_code(ErrorCode::ReduciblePolynomial, [] { nf_new(RationalPoly({Rational(-8), Rational(0), Rational(0), Rational(1)})); });
  expect_code(ErrorCode::NotMonic, [] { nf_new(RationalPoly({Rational(-2), Rational(0), Rational(2)})); });
}

TEST_CASE("scalar arithmetic in Q(sqrt 2)") {
  const AlgebraicScalar th = AlgebraicScalar::generator(sqrt2());
  CHECK(scalar_arith(r2(1, 1), r2(1, -1), ScalarOp::Mul) == AlgebraicScalar(-1L));
  CHECK(scalar_arith(AlgebraicScalar(1L), th, ScalarOp::Div) == AlgebraicScalar(sqrt2(), {Rational(0), Rational(1, 2)}));
  CHECK(scalar_arith(r2(2, 1), r2(2, 1), ScalarOp::Sub).is_zero());
  CHECK(th * th == AlgebraicScalar(2L));
  expect_code(ErrorCode::DivisionByZero, [&] { scalar_arith(th, AlgebraicScalar(0L), ScalarOp::Div); });
  expect_code(ErrorCode::FieldMismatch, [&] { (void)(th + AlgebraicScalar::generator(cbrt2())); });
  CHECK(to_string(r2(1, 2)) == "(1 + 2*r)");
  CHECK(to_string(AlgebraicScalar(Rational(3, 2))) == "3/2");
}

TEST_CASE("rationality tests") {
  const AlgebraicScalar th = AlgebraicScalar::generator(sqrt2());
  CHECK_FALSE(is_rational(th).has_value());
  CHECK(is_rational(th * th) == Rational(2));
  CHECK(is_rational(r2(2, 1) * r2(2, -1)) == Rational(2));
  CHECK(rational_multiple(th + th, th) == Rational(2));
  CHECK_FALSE(rational_multiple(r2(1, 1), r2(1, -1)).has_value());
  CHECK((r2(1, 1) / r2(1, -1)) == r2(-3, -2));
  CHECK_FALSE(rational_multiple(AlgebraicScalar(2L), r2(2, 1)).has_value());
  CHECK((AlgebraicScalar(2L) / r2(2, 1)) == r2(2, -1));
  expect_code(ErrorCode::DivisionByZero, [&] { rational_multiple(th, AlgebraicScalar(0L)); });
}

TEST_CASE("field axioms on random elements") {
  Rng rng(0x5eed);
  for (const FieldHandle& field : {FieldHandle(), sqrt2(), cbrt2()}) {
    CAPTURE(describe_field(field));
    for (int i = 0; i < 10000; ++i) {
      const AlgebraicScalar a = rand_scalar(rng, field), b = rand_scalar(rng, field), c = rand_scalar(rng, field);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE((a - a).is_zero());
      if (!a.is_zero()) {
        REQUIRE(a * a.inverse() == AlgebraicScalar(1L));
        REQUIRE((b / a) * a == b);
      }
    }
  }
}

TEST_CASE("is_rational agrees with rational_multiple by one") {
  Rng rng(17);
  for (const FieldHandle& field : {FieldHandle(), sqrt2(), cbrt2()}) {
    for (int i = 0; i < 2000; ++i) {
      AlgebraicScalar a = rand_scalar(rng, field);
      if (i % 3 == 0) a = AlgebraicScalar(rand_rational(rng));
      REQUIRE(is_rational(a) == rational_multiple(a, AlgebraicScalar(1L)));
      const AlgebraicScalar b = rand_nonzero(rng, field);
      if (auto q = rational_multiple(a, b)) REQUIRE((AlgebraicScalar(*q) * b - a).is_zero());
      const AlgebraicScalar scaled = AlgebraicScalar(rand_rational(rng)) * b;
      REQUIRE(rational_multiple(scaled, b).has_value());
    }
  }
}

TEST_CASE("polynomial toolkit") {
  PolyToolkit t = poly_toolkit(poly({-1, 0, 1}), poly({-1, 1}));
  CHECK(t.gcd == poly({-1, 1}));
  CHECK(t.divides);
  CHECK(t.quotient == poly({1, 1}));
  CHECK(poly_toolkit(poly({0, 0, 0, 1}), poly({1})).p_prime == poly({0, 0, 3}));
  const UniPoly half_cube({AlgebraicScalar(0L), AlgebraicScalar(0L), AlgebraicScalar(0L), AlgebraicScalar(Rational(1, 2))});
  PolyToolkit d = poly_toolkit(half_cube, poly({0, 1}));
  CHECK(d.divides);
  CHECK(d.quotient == UniPoly({AlgebraicScalar(0L), AlgebraicScalar(0L), AlgebraicScalar(Rational(1, 2))}));
  CHECK(poly_toolkit(poly({1, 1}), poly({-1, 1})).coprime);
  expect_code(ErrorCode::DivisionByZeroPolynomial, [] { poly({1, 1}).divmod(UniPoly()); });
}

TEST_CASE("gcd divides both inputs and absorbs common divisors") {
  Rng rng(99);
  for (const FieldHandle& field : {FieldHandle(), sqrt2()}) {
    for (int i = 0; i < 300; ++i) {
      const UniPoly common = rand_nonzero_unipoly(rng, field, 2);
      const UniPoly p = common * rand_nonzero_unipoly(rng, field, 3);
      const UniPoly q = common * rand_nonzero_unipoly(rng, field, 3);
      const UniPoly g = gcd(p, q);
      REQUIRE(divides(g, p));
      REQUIRE(divides(g, q));
      REQUIRE(divides(common, g));
      REQUIRE(g.leading() == AlgebraicScalar(1L));
    }
  }
}

TEST_CASE("split_linear finds roots in Q and in quadratic fields") {
  auto roots = split_linear(poly({-2, 0, 1}));
  CHECK_FALSE(roots.has_value());
  const AlgebraicScalar th = AlgebraicScalar::generator(sqrt2());
  const UniPoly over_r = UniPoly({-th, AlgebraicScalar(1L)}) * UniPoly({-th - AlgebraicScalar(1L), AlgebraicScalar(1L)});
  auto split = split_linear(over_r);
  REQUIRE(split.has_value());
  CHECK(split->size() == 2);
  for (const auto& f : *split) CHECK(over_r(f.root).is_zero());
  CHECK(split_linear(from_rational(RationalPoly({Rational(-3), Rational(0), Rational(1)})) * UniPoly({th, AlgebraicScalar(1L)}))
            .has_value() == false);
  auto rep = split_linear(poly({-1, 1}).pow(3) * poly({2, 1}));
  REQUIRE(rep.has_value());
  int total = 0;
  for (const auto& f : *rep) total += f.multiplicity;
  CHECK(total == 4);
}
