#include "doctest.h"

#include "tropline/field.hpp"
#include "tropline/rng.hpp"

#include "testutil.hpp"

using namespace tropline;

namespace {

AlgebraicNumber omega() { return AlgebraicNumber::generator(FieldContext::omega()); }

AlgebraicNumber om(long long a, long long b) {
  // a + b*omega
  return AlgebraicNumber(FieldContext::omega(), {Rational(a), Rational(b)});
}

}  // namespace

TEST_SUITE_BEGIN("field");

TEST_CASE("rational parse/format round trip") {
  CHECK(to_string(parse_rational("-3/6")) == "-1/2");
  CHECK(to_string(parse_rational("4/2")) == "2");
  CHECK(to_string(parse_rational("0")) == "0");
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("3/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("a/2"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
}

TEST_CASE("reduce of alpha^2 in the omega context is -1 - omega") {
  // long division of a^2 by a^2 + a + 1 leaves -a - 1
  auto r = reduce({Rational(0), Rational(0), Rational(1)}, FieldContext::omega());
  CHECK(r == om(-1, -1));
}

TEST_CASE("reduce leaves degree-0 input unchanged") {
  auto r = reduce({Rational(5)}, FieldContext::omega());
  CHECK(r == om(5, 0));
}

TEST_CASE("reduce of alpha^3 in the omega context is 1") {
  // omega^3 = omega * omega^2 = omega(-1-omega) = -omega - omega^2 = 1
  auto r = reduce({Rational(0), Rational(0), Rational(0), Rational(1)},
                  FieldContext::omega());
  CHECK(r == om(1, 0));
}

TEST_CASE("reduce is idempotent") {
  SplitMix64 rng(11);
  for (int i = 0; i < 50; ++i) {
    std::vector<Rational> p;
    const int len = 1 + static_cast<int>(rng.below(6));
    for (int j = 0; j < len; ++j) p.push_back(tt::rand_rational(rng));
    auto r1 = reduce(p, FieldContext::omega());
    auto r2 = reduce(r1.coeffs(), FieldContext::omega());
    CHECK(r1 == r2);
  }
}

TEST_CASE("invert identity and omega") {
  CHECK(invert(om(1, 0)) == om(1, 0));
  // omega * (-1 - omega) = -omega - omega^2 = 1
  CHECK(invert(omega()) == om(-1, -1));
  CHECK((invert(omega()) * omega()).is_one());
  CHECK_THROWS_AS(invert(om(0, 0)), DivisionByZero);
}

TEST_CASE("invert signals a reducible context") {
  // a^2 - 1 is reducible; a - 1 is a zero divisor mod it
  auto ctx = std::make_shared<FieldContext>(
      std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});
  AlgebraicNumber a(ctx, {Rational(-1), Rational(1)});
  CHECK_THROWS_AS(invert(a), NotInvertible);
}

TEST_CASE("equals on canonical forms") {
  auto w = omega();
  CHECK(equals(w * w * w, om(1, 0)));
  CHECK(equals(om(0, 0), om(0, 0)));
  // canonical forms (0,1) vs (-1,-1)
  CHECK_FALSE(equals(w, w * w));
  AlgebraicNumber q = AlgebraicNumber::from_rational(FieldContext::rationals(),
                                                     Rational(1));
  CHECK_THROWS_AS(equals(w, q), ContextMismatch);
}

TEST_CASE("field axioms on randomized samples") {
  SplitMix64 rng(7);
  auto ctx = FieldContext::omega();
  for (int i = 0; i < 100; ++i) {
    auto a = tt::rand_algebraic(rng, ctx);
    auto b = tt::rand_algebraic(rng, ctx);
    auto c = tt::rand_algebraic(rng, ctx);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK((a * invert(a)).is_one());
  }
}

TEST_CASE("rationals context behaves as Q") {
  auto q = FieldContext::rationals();
  CHECK(q->degree() == 1);
  auto a = AlgebraicNumber::from_rational(q, Rational(2, 3));
  auto b = AlgebraicNumber::from_rational(q, Rational(3, 2));
  CHECK((a * b).is_one());
  CHECK(invert(a) == b);
}

TEST_SUITE_END();
