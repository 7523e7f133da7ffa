#include "doctest.h"

#include "tropline/tropcurve.hpp"
#include "tropline/rng.hpp"

#include "testutil.hpp"

using namespace tropline;
using tt::pconst;
using tt::rat;
using tt::tpow;

namespace {

TropicalPolynomial tp(std::vector<std::tuple<int, int, Rational>> terms) {
  std::vector<TropicalPolynomial::Term> support;
  for (auto& [i, j, c] : terms) support.push_back({{Int(i), Int(j)}, c});
  return TropicalPolynomial(std::move(support));
}

QPoint qp(const Rational& x, const Rational& y) { return {x, y}; }

// mult-weighted outgoing directions must cancel at every vertex
bool balanced(const PlanarComplex& C) {
  for (int vi = 0; vi < static_cast<int>(C.vertices.size()); ++vi) {
    Int sx = 0, sy = 0;
    for (const auto& e : C.edges) {
      if (e.kind == PlanarComplex::Edge::Kind::Line) continue;
      if (e.tail == vi) {
        sx += e.multiplicity * e.dir[0];
        sy += e.multiplicity * e.dir[1];
      }
      if (e.kind == PlanarComplex::Edge::Kind::Segment && e.head == vi) {
        sx -= e.multiplicity * e.dir[0];
        sy -= e.multiplicity * e.dir[1];
      }
    }
    if (sx != 0 || sy != 0) return false;
  }
  return true;
}

bool has_ray(const PlanarComplex& C, const QPoint& from, int dx, int dy,
             long long mult = 1) {
  for (const auto& e : C.edges)
    if (e.kind == PlanarComplex::Edge::Kind::Ray && e.base == from &&
        e.dir == LatticeVec{Int(dx), Int(dy)} && e.multiplicity == mult)
      return true;
  return false;
}

// independent membership oracle: compare geometric membership with the
// two-maximizers criterion on a grid around the complex
void check_grid_against_argmax(const TropicalPolynomial& F,
                               const PlanarComplex& C) {
  Rational x0(-5), x1(5), y0(-5), y1(5);
  for (const auto& v : C.vertices) {
    x0 = std::min(x0, Rational(v.x - 2));
    x1 = std::max(x1, Rational(v.x + 2));
    y0 = std::min(y0, Rational(v.y - 2));
    y1 = std::max(y1, Rational(v.y + 2));
  }
  const Rational step(1, 2);
  for (Rational x = x0; x <= x1; x += step) {
    for (Rational y = y0; y <= y1; y += step) {
      const QPoint p = qp(x, y);
      const auto [val, argmax] = eval_with_argmax(F, p);
      CHECK(point_on_complex(C, p) == (argmax.size() >= 2));
    }
  }
}

TropicalPolynomial rand_full_support(SplitMix64& rng, int degree) {
  std::vector<TropicalPolynomial::Term> support;
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree; ++j)
      support.push_back({{Int(i), Int(j)}, tt::rand_rational(rng, 6, 2)});
  return TropicalPolynomial(std::move(support));
}

std::vector<tt::IPoint> support_points(const TropicalPolynomial& F) {
  std::vector<tt::IPoint> pts;
  for (const auto& t : F.support()) pts.push_back({t.exp[0], t.exp[1]});
  return pts;
}

}  // namespace

TEST_SUITE_BEGIN("tropcurve");

TEST_CASE("tropicalize_poly takes coefficient valuations") {
  // x + y + t -> {(1,0):0, (0,1):0, (0,0):-1}
  auto T = tropicalize_poly(tt::line2(pconst(1), pconst(1), tpow(1)));
  REQUIRE(T.support().size() == 3);
  for (const auto& term : T.support()) {
    if (term.exp == LatticeVec{0, 0}) CHECK(term.coeff == rat(-1));
    else CHECK(term.coeff == rat(0));
  }

  // x + t*y + t^3 -> {(1,0):0, (0,1):-1, (0,0):-3}
  auto U = tropicalize_poly(tt::line2(pconst(1), tpow(1), tpow(3)));
  for (const auto& term : U.support()) {
    if (term.exp == LatticeVec{1, 0}) CHECK(term.coeff == rat(0));
    if (term.exp == LatticeVec{0, 1}) CHECK(term.coeff == rat(-1));
    if (term.exp == LatticeVec{0, 0}) CHECK(term.coeff == rat(-3));
  }

  // (1-t)*y + (1-t^3) -> {(0,1):0, (0,0):0}
  auto V = tropicalize_poly(
      KPolynomial(2, tt::Q(),
                  {{{0, 1}, pconst(1) - tpow(1)}, {{0, 0}, pconst(1) - tpow(3)}}));
  REQUIRE(V.support().size() == 2);
  CHECK(V.support()[0].coeff == rat(0));
  CHECK(V.support()[1].coeff == rat(0));

  CHECK_THROWS_AS(tropicalize_poly(KPolynomial(2, tt::Q())), ZeroPolynomial);
}

TEST_CASE("eval_with_argmax worked examples") {
  auto T = tp({{1, 0, rat(0)}, {0, 1, rat(0)}, {0, 0, rat(0)}});  // trop(x+y+1)
  {
    auto [val, am] = eval_with_argmax(T, qp(rat(0), rat(0)));
    CHECK(val == rat(0));
    CHECK(am.size() == 3);
  }
  {
    auto [val, am] = eval_with_argmax(T, qp(rat(-1), rat(0)));
    CHECK(val == rat(0));
    REQUIRE(am.size() == 2);
    CHECK(am[0] == LatticeVec{0, 0});
    CHECK(am[1] == LatticeVec{0, 1});
  }
  auto U = tp({{1, 0, rat(0)}, {0, 1, rat(-1)}, {0, 0, rat(-3)}});
  {
    auto [val, am] = eval_with_argmax(U, qp(rat(-1), rat(0)));
    CHECK(val == rat(-1));
    REQUIRE(am.size() == 2);
    CHECK(am[0] == LatticeVec{0, 1});
    CHECK(am[1] == LatticeVec{1, 0});
  }
}

TEST_CASE("corner locus of tropical lines") {
  auto T = tp({{1, 0, rat(0)}, {0, 1, rat(0)}, {0, 0, rat(0)}});
  auto C = corner_locus(T);
  REQUIRE(C.vertices.size() == 1);
  CHECK(C.vertices[0] == qp(rat(0), rat(0)));
  REQUIRE(C.edges.size() == 3);
  CHECK(has_ray(C, C.vertices[0], 1, 1));
  CHECK(has_ray(C, C.vertices[0], -1, 0));
  CHECK(has_ray(C, C.vertices[0], 0, -1));
  CHECK(balanced(C));
  check_grid_against_argmax(T, C);

  auto U = tp({{1, 0, rat(0)}, {0, 1, rat(0)}, {0, 0, rat(-1)}});  // trop(x+y+t)
  auto CU = corner_locus(U);
  REQUIRE(CU.vertices.size() == 1);
  CHECK(CU.vertices[0] == qp(rat(-1), rat(-1)));
  CHECK(has_ray(CU, CU.vertices[0], 1, 1));
  CHECK(has_ray(CU, CU.vertices[0], -1, 0));
  CHECK(has_ray(CU, CU.vertices[0], 0, -1));

  auto V = tp({{1, 0, rat(0)}, {0, 1, rat(-1)}, {0, 0, rat(-3)}});
  auto CV = corner_locus(V);
  REQUIRE(CV.vertices.size() == 1);
  CHECK(CV.vertices[0] == qp(rat(-3), rat(-2)));
  CHECK(has_ray(CV, CV.vertices[0], 1, 1));
  CHECK(balanced(CV));
  check_grid_against_argmax(V, CV);
}

TEST_CASE("corner locus errors on a single monomial") {
  CHECK_THROWS_AS(corner_locus(tp({{2, 1, rat(5)}})), DegenerateSupport);
}

TEST_CASE("corner locus of collinear support is a line") {
  // trop of x + t*y: max(x, y - 1), the line y = x + 1
  auto T = tp({{1, 0, rat(0)}, {0, 1, rat(-1)}});
  auto C = corner_locus(T);
  CHECK(C.vertices.empty());
  REQUIRE(C.edges.size() == 1);
  CHECK(C.edges[0].kind == PlanarComplex::Edge::Kind::Line);
  CHECK(C.edges[0].dir == LatticeVec{1, 1});
  CHECK(point_on_complex(C, qp(rat(0), rat(1))));
  CHECK(point_on_complex(C, qp(rat(5), rat(6))));
  CHECK_FALSE(point_on_complex(C, qp(rat(0), rat(0))));
  check_grid_against_argmax(T, C);

  // univariate in x, two corner lines: max(2x, x - 1, -5)
  auto U = tp({{2, 0, rat(0)}, {1, 0, rat(-1)}, {0, 0, rat(-5)}});
  auto CU = corner_locus(U);
  CHECK(CU.vertices.empty());
  REQUIRE(CU.edges.size() == 2);
  check_grid_against_argmax(U, CU);
}

TEST_CASE("interior subdivision edges become segments") {
  // square Newton polygon with the center lifted to 3: fan of four facets,
  // dual diamond (0,-3)(3,0)(0,3)(-3,0) with four boundary rays of mult 2
  auto T = tp({{0, 0, rat(0)}, {2, 0, rat(0)}, {0, 2, rat(0)}, {2, 2, rat(0)},
               {1, 1, rat(3)}});
  auto C = corner_locus(T);
  CHECK(balanced(C));
  REQUIRE(C.vertices.size() == 4);
  int segments = 0, rays = 0;
  for (const auto& e : C.edges) {
    if (e.kind == PlanarComplex::Edge::Kind::Segment) {
      ++segments;
      CHECK(e.multiplicity == 1);
    }
    if (e.kind == PlanarComplex::Edge::Kind::Ray) {
      ++rays;
      CHECK(e.multiplicity == 2);
    }
  }
  CHECK(segments == 4);
  CHECK(rays == 4);
  bool seen_bottom = false;
  for (const auto& v : C.vertices)
    if (v == qp(rat(0), rat(-3))) seen_bottom = true;
  CHECK(seen_bottom);
  check_grid_against_argmax(T, C);

  // midpoint of the degree-2 slant edge lifted: exactly one interior edge
  auto U = tp({{2, 0, rat(0)}, {0, 2, rat(0)}, {0, 0, rat(0)}, {1, 1, rat(3)}});
  auto CU = corner_locus(U);
  CHECK(balanced(CU));
  int seg_u = 0;
  for (const auto& e : CU.edges)
    if (e.kind == PlanarComplex::Edge::Kind::Segment) ++seg_u;
  CHECK(seg_u == 1);
  check_grid_against_argmax(U, CU);
}

TEST_CASE("multiplicity is the lattice length of the dual edge") {
  // max(2x, 0): the line x = 0 with multiplicity 2
  auto T = tp({{2, 0, rat(0)}, {0, 0, rat(0)}});
  auto C = corner_locus(T);
  REQUIRE(C.edges.size() == 1);
  CHECK(C.edges[0].multiplicity == 2);

  // conic with all coefficients 0: vertex at origin, rays of mult 2
  auto U = tp({{2, 0, rat(0)}, {0, 2, rat(0)}, {0, 0, rat(0)}});
  auto CU = corner_locus(U);
  REQUIRE(CU.vertices.size() == 1);
  CHECK(has_ray(CU, CU.vertices[0], 1, 1, 2));
  CHECK(has_ray(CU, CU.vertices[0], -1, 0, 2));
  CHECK(has_ray(CU, CU.vertices[0], 0, -1, 2));
  CHECK(balanced(CU));
}

TEST_CASE("balancing holds on random corner loci") {
  SplitMix64 rng(41);
  for (int it = 0; it < 40; ++it) {
    const int deg = 1 + static_cast<int>(rng.below(3));
    auto F = rand_full_support(rng, deg);
    auto C = corner_locus(F);
    CHECK(balanced(C));
  }
}

TEST_CASE("set intersection of the worked line pair") {
  auto C1 = corner_locus(tropicalize_poly(tt::line2(pconst(1), pconst(1), pconst(1))));
  auto C2 = corner_locus(tropicalize_poly(tt::line2(pconst(1), tpow(1), tpow(3))));
  auto rep = set_intersection(C1, C2);
  REQUIRE(rep.is_finite());
  REQUIRE(rep.points.size() == 1);
  CHECK(rep.points[0].first == qp(rat(-1), rat(0)));
  CHECK(rep.points[0].second == 1);
  CHECK(rep.total_multiplicity == 1);

  // Kapranov: the tropicalized solution of the K-system is the crossing
  std::array<std::array<PuiseuxElement, 2>, 2> A = {
      {{pconst(1), pconst(1)}, {pconst(1), tpow(1)}}};
  std::array<PuiseuxElement, 2> b = {pconst(-1), -tpow(3)};
  auto sol = solve2x2(A, b);
  auto tpnt = trop_point({sol[0], sol[1]});
  CHECK(tpnt[0] == TropicalValue(rat(-1)));
  CHECK(tpnt[1] == TropicalValue(rat(0)));
}

TEST_CASE("self intersection is infinite") {
  auto C = corner_locus(tropicalize_poly(tt::line2(pconst(1), pconst(1), pconst(1))));
  auto rep = set_intersection(C, C);
  CHECK_FALSE(rep.is_finite());
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->first != rep.witness->second);
}

TEST_CASE("parallel line pair: set infinite, stable total 1 at the limit") {
  auto C1 = corner_locus(tropicalize_poly(tt::line2(pconst(1), pconst(1), pconst(1))));
  auto C2 = corner_locus(tropicalize_poly(tt::line2(pconst(1), pconst(1), tpow(1))));
  auto rep = set_intersection(C1, C2);
  CHECK_FALSE(rep.is_finite());

  auto st = stable_intersection(C1, C2);
  REQUIRE(st.is_finite());
  CHECK(st.total_multiplicity == 1);
  REQUIRE(st.points.size() == 1);
  // the shared diagonal ray starts at the vertex of trop(x+y+1)
  CHECK(st.points[0].first == qp(rat(0), rat(0)));
}

TEST_CASE("stable intersection totals equal the mixed volume") {
  SplitMix64 rng(42);
  for (int it = 0; it < 25; ++it) {
    const int d1 = 1 + static_cast<int>(rng.below(2));
    const int d2 = 1 + static_cast<int>(rng.below(3));
    auto F = rand_full_support(rng, d1);
    auto G = rand_full_support(rng, d2);
    auto rep = stable_intersection(corner_locus(F), corner_locus(G));
    REQUIRE(rep.is_finite());
    const Int mv = tt::mixed_volume(support_points(F), support_points(G));
    CHECK(Int(rep.total_multiplicity) == mv);
    CHECK(mv == Int(d1) * Int(d2));  // full supports: tropical Bezout d*e
  }
}

TEST_CASE("stable points lie inside finite set intersections") {
  SplitMix64 rng(43);
  int done = 0;
  while (done < 20) {
    auto F = rand_full_support(rng, 1 + static_cast<int>(rng.below(2)));
    auto G = rand_full_support(rng, 1 + static_cast<int>(rng.below(2)));
    auto CF = corner_locus(F);
    auto CG = corner_locus(G);
    auto set_rep = set_intersection(CF, CG);
    if (!set_rep.is_finite()) continue;
    auto st = stable_intersection(CF, CG);
    for (const auto& [p, m] : st.points) {
      bool found = false;
      for (const auto& [q, mq] : set_rep.points)
        if (p == q && m == mq) found = true;
      CHECK(found);
      CHECK(point_on_complex(CF, p));
      CHECK(point_on_complex(CG, p));
    }
    ++done;
  }
}

TEST_CASE("displaced-by-actual-epsilon oracle agrees on the parallel pair") {
  // An explicit small displacement of trop(x+y+t) reproduces the stable
  // point of the parallel pair: crossing stays near (0,0) as eps -> 0.
  auto C1 = corner_locus(tropicalize_poly(tt::line2(pconst(1), pconst(1), pconst(1))));
  for (const Rational eps : {rat(1, 100), rat(1, 10000)}) {
    auto C2 = corner_locus(tropicalize_poly(tt::line2(pconst(1), pconst(1), tpow(1))));
    for (auto& v : C2.vertices) {
      v.x += eps;
      v.y += eps * rat(1, 2);
    }
    for (auto& e : C2.edges) {
      e.base.x += eps;
      e.base.y += eps * rat(1, 2);
    }
    auto rep = set_intersection(C1, C2);
    REQUIRE(rep.is_finite());
    REQUIRE(rep.points.size() == 1);
    // crossing on the south ray of trop(x+y+1), within eps of the vertex
    CHECK(rep.points[0].first.x == rat(0));
    CHECK(rep.points[0].first.y < rat(0));
    CHECK(rep.points[0].first.y > -eps);
  }
}

TEST_SUITE_END();
