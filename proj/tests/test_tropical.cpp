#include "doctest.h"

#include "tropline/puiseux.hpp"
#include "tropline/tropical.hpp"

#include "testutil.hpp"

using namespace tropline;
using tt::fr;
using tt::pconst;
using tt::rat;
using tt::tpow;

TEST_SUITE_BEGIN("tropical");

TEST_CASE("tadd is max with -inf neutral") {
  TropicalValue ninf = TropicalValue::minus_infinity();
  CHECK(tadd(ninf, TropicalValue(rat(5))) == TropicalValue(rat(5)));
  CHECK(tadd(TropicalValue(rat(3)), TropicalValue(rat(-1, 2))) ==
        TropicalValue(rat(3)));
  CHECK(tadd(valuation(tpow(1)), valuation(pconst(1))) == TropicalValue(rat(0)));
  CHECK(tadd(ninf, ninf).is_minus_infinity());
}

TEST_CASE("tmul is + with -inf absorbing") {
  TropicalValue ninf = TropicalValue::minus_infinity();
  CHECK(tmul(ninf, TropicalValue(rat(5))).is_minus_infinity());
  CHECK(tmul(TropicalValue(rat(-1)), TropicalValue(rat(-2))) ==
        TropicalValue(rat(-3)));
  CHECK(tmul(valuation(tpow(1)), valuation(tpow(2))) == TropicalValue(rat(-3)));
}

TEST_CASE("trop_point examples") {
  auto ctx = tt::Q();
  KPoint origin = {PuiseuxFraction::zero(ctx), PuiseuxFraction::zero(ctx)};
  auto tp = trop_point(origin);
  REQUIRE(tp.size() == 2);
  CHECK(tp[0].is_minus_infinity());
  CHECK(tp[1].is_minus_infinity());

  KPoint p = {fr(tpow(1) + tpow(2)), fr(-(pconst(1) + tpow(1) + tpow(2)))};
  auto tq = trop_point(p);
  CHECK(tq[0] == TropicalValue(rat(-1)));
  CHECK(tq[1] == TropicalValue(rat(0)));

  KPoint r = {fr(pconst(1)), fr(tpow(3))};
  auto tr = trop_point(r);
  CHECK(tr[0] == TropicalValue(rat(0)));
  CHECK(tr[1] == TropicalValue(rat(-3)));
}

TEST_CASE("semiring axioms on randomized values") {
  SplitMix64 rng(31);
  auto rand_tv = [&rng]() -> TropicalValue {
    if (rng.below(8) == 0) return TropicalValue::minus_infinity();
    return TropicalValue(tt::rand_rational(rng));
  };
  for (int i = 0; i < 300; ++i) {
    TropicalValue a = rand_tv(), b = rand_tv(), c = rand_tv();
    CHECK(tadd(tadd(a, b), c) == tadd(a, tadd(b, c)));
    CHECK(tadd(a, b) == tadd(b, a));
    CHECK(tadd(a, a) == a);  // idempotent
    CHECK(tmul(tmul(a, b), c) == tmul(a, tmul(b, c)));
    CHECK(tmul(a, b) == tmul(b, a));
    CHECK(tmul(a, tadd(b, c)) == tadd(tmul(a, b), tmul(a, c)));
    CHECK(tadd(TropicalValue::minus_infinity(), a) == a);
    CHECK(tmul(TropicalValue::minus_infinity(), a).is_minus_infinity());
  }
}

TEST_CASE("trop_point commutes with coordinatewise multiplication") {
  SplitMix64 rng(32);
  auto ctx = tt::Q();
  for (int i = 0; i < 100; ++i) {
    KPoint p = tt::rand_point(rng, ctx, 3);
    KPoint q = tt::rand_point(rng, ctx, 3);
    KPoint prod;
    for (int k = 0; k < 3; ++k) prod.push_back(p[k] * q[k]);
    auto lhs = trop_point(prod);
    auto tp = trop_point(p);
    auto tq = trop_point(q);
    for (int k = 0; k < 3; ++k) CHECK(lhs[k] == tmul(tp[k], tq[k]));
  }
}

TEST_CASE("tropical value parsing") {
  CHECK(parse_tropical_value("-inf").is_minus_infinity());
  CHECK(parse_tropical_value("-7/3") == TropicalValue(rat(-7, 3)));
}

TEST_SUITE_END();
