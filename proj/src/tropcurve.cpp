#include "tropline/tropcurve.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <tuple>

namespace tropline {

namespace {

Int iabs(const Int& a) { return a < 0 ? -a : a; }

Int igcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(iabs(a), iabs(b));
}

Int cross(const LatticeVec& a, const LatticeVec& b) {
  return a[0] * b[1] - a[1] * b[0];
}

LatticeVec sub(const LatticeVec& a, const LatticeVec& b) {
  return {a[0] - b[0], a[1] - b[1]};
}

bool lattice_less(const LatticeVec& a, const LatticeVec& b) {
  return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
}

LatticeVec primitive(LatticeVec v) {
  const Int g = igcd(v[0], v[1]);
  assert(g != 0);
  return {v[0] / g, v[1] / g};
}

LatticeVec lex_positive(LatticeVec v) {
  if (v[0] < 0 || (v[0] == 0 && v[1] < 0)) return {-v[0], -v[1]};
  return v;
}

struct QVec {
  Rational x, y;
};

QVec qsub(const QPoint& a, const QPoint& b) { return {a.x - b.x, a.y - b.y}; }

Rational crossq(const QVec& a, const LatticeVec& d) {
  return a.x * Rational(d[1]) - a.y * Rational(d[0]);
}

// Primitive integer direction of a nonzero rational vector, plus the rational
// step such that v = step * dir.
std::pair<LatticeVec, Rational> primitive_of_rational(const QVec& v) {
  const Int l = boost::multiprecision::lcm(denominator(v.x), denominator(v.y));
  LatticeVec n = {numerator(v.x) * (l / denominator(v.x)),
                  numerator(v.y) * (l / denominator(v.y))};
  const LatticeVec d = primitive(n);
  const Rational step = d[0] != 0 ? v.x / Rational(d[0]) : v.y / Rational(d[1]);
  return {d, step};
}

QPoint point_at(const QPoint& base, const LatticeVec& dir, const Rational& s) {
  return {base.x + s * Rational(dir[0]), base.y + s * Rational(dir[1])};
}

// Closed parameter range of an edge; absent bounds are infinite.
struct ParamRange {
  std::optional<Rational> lo, hi;
};

ParamRange range_of(const PlanarComplex::Edge& e) {
  using Kind = PlanarComplex::Edge::Kind;
  switch (e.kind) {
    case Kind::Segment:
      return {Rational(0), e.length};
    case Kind::Ray:
      return {Rational(0), std::nullopt};
    case Kind::Line:
    default:
      return {std::nullopt, std::nullopt};
  }
}

bool in_range(const ParamRange& r, const Rational& s) {
  if (r.lo && s < *r.lo) return false;
  if (r.hi && s > *r.hi) return false;
  return true;
}

// Membership of s0 + eps*slope for all sufficiently small eps > 0. Boundary
// cases are decided by the slope, which the displacement direction keeps
// nonzero there.
bool in_range_small_eps(const ParamRange& r, const Rational& s0,
                        const Rational& slope) {
  if (r.lo) {
    if (s0 < *r.lo) return false;
    if (s0 == *r.lo && slope < 0) return false;
    assert(!(s0 == *r.lo && slope == 0));
  }
  if (r.hi) {
    if (s0 > *r.hi) return false;
    if (s0 == *r.hi && slope > 0) return false;
    assert(!(s0 == *r.hi && slope == 0));
  }
  return true;
}

// ---------------------------------------------------------------------------
// Corner locus construction

struct LiftedPoint {
  LatticeVec e;
  Rational c;
};

bool all_collinear(const std::vector<LiftedPoint>& pts) {
  const LatticeVec d = sub(pts[1].e, pts[0].e);
  for (std::size_t k = 2; k < pts.size(); ++k)
    if (cross(sub(pts[k].e, pts[0].e), d) != 0) return false;
  return true;
}

// Strictly convex hull (corners only), counterclockwise.
std::vector<LatticeVec> lattice_hull(std::vector<LatticeVec> pts) {
  std::sort(pts.begin(), pts.end(), lattice_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<LatticeVec> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(sub(h[k - 1], h[k - 2]), sub(pts[i], h[k - 2])) <= 0)
      --k;
    h[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower &&
           cross(sub(h[k - 1], h[k - 2]), sub(pts[i], h[k - 2])) <= 0)
      --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

PlanarComplex corner_locus_collinear(const std::vector<LiftedPoint>& pts) {
  // The Newton polygon is a segment; the curve is a union of parallel lines,
  // one per cell of the upper envelope along the segment.
  LatticeVec anchor = pts[0].e;
  for (const auto& p : pts)
    if (lattice_less(p.e, anchor)) anchor = p.e;
  const LatticeVec d = lex_positive(primitive(sub(pts[1].e, pts[0].e)));

  std::vector<std::pair<Int, Rational>> sc;  // (s, c) with e = anchor + s*d
  sc.reserve(pts.size());
  for (const auto& p : pts) {
    const LatticeVec delta = sub(p.e, anchor);
    const Int s = d[0] != 0 ? delta[0] / d[0] : delta[1] / d[1];
    assert(point_at(QPoint{Rational(anchor[0]), Rational(anchor[1])}, d,
                    Rational(s)) ==
           (QPoint{Rational(p.e[0]), Rational(p.e[1])}));
    sc.emplace_back(s, p.c);
  }
  std::sort(sc.begin(), sc.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  // Upper concave envelope of (s, c).
  std::vector<std::pair<Int, Rational>> hull;
  for (const auto& p : sc) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull[hull.size() - 1];
      const Rational turn = Rational(a.first - o.first) * (p.second - o.second) -
                            (a.second - o.second) * Rational(p.first - o.first);
      if (turn >= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }

  PlanarComplex out;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const auto& [sa, ca] = hull[i];
    const auto& [sb, cb] = hull[i + 1];
    const Rational sigma = (cb - ca) / Rational(sb - sa);
    PlanarComplex::Edge edge;
    edge.kind = PlanarComplex::Edge::Kind::Line;
    // the line d0*x + d1*y = -sigma
    edge.base = d[1] != 0 ? QPoint{Rational(0), -sigma / Rational(d[1])}
                          : QPoint{-sigma / Rational(d[0]), Rational(0)};
    edge.dir = lex_positive(LatticeVec{-d[1], d[0]});
    edge.multiplicity = static_cast<long long>(sb - sa);
    LatticeVec u = {anchor[0] + sa * d[0], anchor[1] + sa * d[1]};
    LatticeVec w = {anchor[0] + sb * d[0], anchor[1] + sb * d[1]};
    if (lattice_less(w, u)) std::swap(u, w);
    edge.dual = {u, w};
    out.edges.push_back(std::move(edge));
  }
  return out;
}

struct Facet {
  Rational alpha, beta, gamma;  // supporting plane z = alpha*i + beta*j + gamma
  std::vector<LatticeVec> members;
};

PlanarComplex corner_locus_full(const std::vector<LiftedPoint>& pts) {
  const std::size_t n = pts.size();

  // Enumerate upper facets as maximal coplanar supporting sets.
  std::map<std::pair<Rational, Rational>, Facet> facets;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        const LatticeVec u = sub(pts[b].e, pts[a].e);
        const LatticeVec v = sub(pts[c].e, pts[a].e);
        const Int det = cross(u, v);
        if (det == 0) continue;
        const Rational cu = pts[b].c - pts[a].c;
        const Rational cv = pts[c].c - pts[a].c;
        const Rational alpha =
            (cu * Rational(v[1]) - cv * Rational(u[1])) / Rational(det);
        const Rational beta =
            (cv * Rational(u[0]) - cu * Rational(v[0])) / Rational(det);
        const Rational gamma = pts[a].c - alpha * Rational(pts[a].e[0]) -
                               beta * Rational(pts[a].e[1]);
        const auto key = std::make_pair(alpha, beta);
        if (facets.count(key)) continue;
        Facet f{alpha, beta, gamma, {}};
        bool upper = true;
        for (std::size_t k = 0; k < n; ++k) {
          const Rational lift = alpha * Rational(pts[k].e[0]) +
                                beta * Rational(pts[k].e[1]) + gamma;
          if (pts[k].c > lift) {
            upper = false;
            break;
          }
          if (pts[k].c == lift) f.members.push_back(pts[k].e);
        }
        if (upper) facets.emplace(key, std::move(f));
      }
    }
  }
  assert(!facets.empty());

  PlanarComplex out;
  struct FacetGeom {
    int vertex;
    std::vector<LatticeVec> hull;
  };
  std::vector<FacetGeom> geoms;
  using EdgeKey = std::pair<LatticeVec, LatticeVec>;
  std::map<EdgeKey, std::vector<int>, bool (*)(const EdgeKey&, const EdgeKey&)>
      edge_owners(+[](const EdgeKey& a, const EdgeKey& b) {
        if (lattice_less(a.first, b.first)) return true;
        if (lattice_less(b.first, a.first)) return false;
        return lattice_less(a.second, b.second);
      });

  for (const auto& [key, facet] : facets) {
    FacetGeom g;
    g.vertex = static_cast<int>(out.vertices.size());
    out.vertices.push_back(QPoint{-facet.alpha, -facet.beta});
    g.hull = lattice_hull(facet.members);
    const int fid = static_cast<int>(geoms.size());
    for (std::size_t i = 0; i < g.hull.size(); ++i) {
      LatticeVec u = g.hull[i];
      LatticeVec w = g.hull[(i + 1) % g.hull.size()];
      if (lattice_less(w, u)) std::swap(u, w);
      edge_owners[{u, w}].push_back(fid);
    }
    geoms.push_back(std::move(g));
  }

  for (const auto& [key, owners] : edge_owners) {
    const LatticeVec& u = key.first;
    const LatticeVec& w = key.second;
    const LatticeVec delta = sub(w, u);
    PlanarComplex::Edge edge;
    edge.multiplicity = static_cast<long long>(igcd(delta[0], delta[1]));
    edge.dual = {u, w};
    assert(owners.size() == 1 || owners.size() == 2);
    if (owners.size() == 2) {
      const QPoint v1 = out.vertices[geoms[owners[0]].vertex];
      const QPoint v2 = out.vertices[geoms[owners[1]].vertex];
      edge.kind = PlanarComplex::Edge::Kind::Segment;
      edge.tail = geoms[owners[0]].vertex;
      edge.head = geoms[owners[1]].vertex;
      edge.base = v1;
      auto [dir, step] = primitive_of_rational(qsub(v2, v1));
      edge.dir = dir;
      edge.length = step;
      assert(step > 0);
      // dual edge is perpendicular to the segment
      assert(edge.dir[0] * delta[0] + edge.dir[1] * delta[1] == 0);
    } else {
      // Boundary edge of the Newton polygon: dual ray in the outward
      // normal direction.
      edge.kind = PlanarComplex::Edge::Kind::Ray;
      edge.tail = geoms[owners[0]].vertex;
      edge.base = out.vertices[edge.tail];
      LatticeVec nrm = primitive(LatticeVec{delta[1], -delta[0]});
      bool oriented = false;
      for (const auto& p : pts) {
        const Int dot =
            nrm[0] * (p.e[0] - u[0]) + nrm[1] * (p.e[1] - u[1]);
        if (dot == 0) continue;
        if (dot > 0) nrm = {-nrm[0], -nrm[1]};
        oriented = true;
        break;
      }
      assert(oriented);
      (void)oriented;
      edge.dir = nrm;
    }
    out.edges.push_back(std::move(edge));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Intersection machinery

// s-coordinate of point p on the line base + s*dir (p assumed on the line).
Rational param_on_line(const QPoint& base, const LatticeVec& dir,
                       const QPoint& p) {
  return dir[0] != 0 ? (p.x - base.x) / Rational(dir[0])
                     : (p.y - base.y) / Rational(dir[1]);
}

struct Overlap {
  enum class Kind { Empty, Point, Segment };
  Kind kind = Kind::Empty;
  QPoint a, b;  // Point: a; Segment: two distinct points
};

// Exact intersection of two collinear edges.
Overlap collinear_overlap(const PlanarComplex::Edge& e1,
                          const PlanarComplex::Edge& e2) {
  const ParamRange r1 = range_of(e1);
  const ParamRange r2 = range_of(e2);
  // Map e2's range into e1 parameters. Both directions are primitive and
  // parallel, hence equal up to sign.
  const bool flip = e1.dir != e2.dir;
  assert(flip ? (e2.dir == LatticeVec{-e1.dir[0], -e1.dir[1]}) : true);
  const Rational s_base = param_on_line(e1.base, e1.dir, e2.base);
  std::optional<Rational> lo2, hi2;
  if (!flip) {
    if (r2.lo) lo2 = s_base + *r2.lo;
    if (r2.hi) hi2 = s_base + *r2.hi;
  } else {
    if (r2.hi) lo2 = s_base - *r2.hi;
    if (r2.lo) hi2 = s_base - *r2.lo;
  }
  std::optional<Rational> lo = r1.lo, hi = r1.hi;
  if (lo2 && (!lo || *lo2 > *lo)) lo = lo2;
  if (hi2 && (!hi || *hi2 < *hi)) hi = hi2;

  Overlap out;
  if (lo && hi && *lo > *hi) return out;
  if (lo && hi && *lo == *hi) {
    out.kind = Overlap::Kind::Point;
    out.a = point_at(e1.base, e1.dir, *lo);
    return out;
  }
  // Positive-length (possibly unbounded) overlap: produce two witnesses.
  Rational sa = lo ? *lo : (hi ? *hi - 1 : Rational(0));
  Rational sb = hi ? *hi : sa + 1;
  if (!lo && !hi) sb = 1;
  out.kind = Overlap::Kind::Segment;
  out.a = point_at(e1.base, e1.dir, sa);
  out.b = point_at(e1.base, e1.dir, sb);
  return out;
}

// Deterministic displacement directions (1, xi): the documented prefix, then
// a Farey-style sweep of the remaining proper fractions.
std::vector<Rational> displacement_schedule() {
  std::vector<Rational> xs = {Rational(1, 2), Rational(1, 3), Rational(2, 5)};
  std::set<Rational> seen(xs.begin(), xs.end());
  for (int q = 2; q <= 40; ++q) {
    for (int p = 1; p < q; ++p) {
      if (boost::multiprecision::gcd(Int(p), Int(q)) != 1) continue;
      const Rational xi(p, q);
      if (seen.insert(xi).second) xs.push_back(xi);
    }
  }
  return xs;
}

Rational pick_generic_xi(const PlanarComplex& C1, const PlanarComplex& C2) {
  static const std::vector<Rational> schedule = displacement_schedule();
  for (const Rational& xi : schedule) {
    bool ok = true;
    for (const auto* C : {&C1, &C2}) {
      for (const auto& e : C->edges) {
        // (1, xi) parallel to dir iff xi*dir_x == dir_y
        if (xi * Rational(e.dir[0]) == Rational(e.dir[1])) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) return xi;
  }
  throw InvalidArgument("displacement schedule exhausted");
}

// Limit intersection points of C1 with C2 displaced by eps*(1, xi), with
// multiplicities m1*m2*|det|; the content of the stable intersection.
std::map<QPoint, long long> stable_points(const PlanarComplex& C1,
                                          const PlanarComplex& C2) {
  const Rational xi = pick_generic_xi(C1, C2);
  const QVec v{Rational(1), xi};
  std::map<QPoint, long long> acc;
  for (const auto& e1 : C1.edges) {
    for (const auto& e2 : C2.edges) {
      const Int det = cross(e1.dir, e2.dir);
      if (det == 0) continue;  // displaced parallels never meet
      const QVec delta = qsub(e2.base, e1.base);
      const Rational s10 = crossq(delta, e2.dir) / Rational(det);
      const Rational s11 = crossq(v, e2.dir) / Rational(det);
      const Rational s20 = crossq(delta, e1.dir) / Rational(det);
      const Rational s21 = crossq(v, e1.dir) / Rational(det);
      if (!in_range_small_eps(range_of(e1), s10, s11)) continue;
      if (!in_range_small_eps(range_of(e2), s20, s21)) continue;
      const QPoint p = point_at(e1.base, e1.dir, s10);
      acc[p] += e1.multiplicity * e2.multiplicity *
                static_cast<long long>(iabs(det));
    }
  }
  return acc;
}

}  // namespace

TropicalPolynomial::TropicalPolynomial(std::vector<Term> support)
    : support_(std::move(support)) {
  if (support_.empty())
    throw ZeroPolynomial("tropical polynomial needs nonempty support");
  std::sort(support_.begin(), support_.end(),
            [](const Term& a, const Term& b) { return lattice_less(a.exp, b.exp); });
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (support_[i].exp[0] < 0 || support_[i].exp[1] < 0)
      throw InvalidArgument("negative exponent in tropical polynomial");
    if (i > 0 && support_[i - 1].exp == support_[i].exp)
      throw InvalidArgument("duplicate exponent in tropical polynomial");
  }
}

Int TropicalPolynomial::degree() const {
  Int d = 0;
  for (const auto& t : support_) d = std::max(d, Int(t.exp[0] + t.exp[1]));
  return d;
}

TropicalPolynomial tropicalize_poly(const KPolynomial& F) {
  if (F.variables() != 2)
    throw DimensionMismatch("tropicalize_poly expects a plane-curve polynomial");
  if (F.is_zero()) throw ZeroPolynomial("tropicalization of the zero polynomial");
  std::vector<TropicalPolynomial::Term> support;
  support.reserve(F.monomials().size());
  for (const auto& m : F.monomials()) {
    // normalized polynomials carry no zero coefficients
    support.push_back({{Int(m.exponents[0]), Int(m.exponents[1])},
                       valuation(m.coeff).finite_value()});
  }
  return TropicalPolynomial(std::move(support));
}

std::pair<Rational, std::vector<LatticeVec>> eval_with_argmax(
    const TropicalPolynomial& F, const QPoint& p) {
  std::optional<Rational> best;
  std::vector<LatticeVec> argmax;
  for (const auto& t : F.support()) {
    const Rational val =
        t.coeff + Rational(t.exp[0]) * p.x + Rational(t.exp[1]) * p.y;
    if (!best || val > *best) {
      best = val;
      argmax.clear();
      argmax.push_back(t.exp);
    } else if (val == *best) {
      argmax.push_back(t.exp);
    }
  }
  return {*best, std::move(argmax)};
}

PlanarComplex corner_locus(const TropicalPolynomial& F) {
  std::vector<LiftedPoint> pts;
  pts.reserve(F.support().size());
  for (const auto& t : F.support()) pts.push_back({t.exp, t.coeff});
  if (pts.size() < 2)
    throw DegenerateSupport("single-monomial support has empty corner locus");
  if (all_collinear(pts)) return corner_locus_collinear(pts);
  return corner_locus_full(pts);
}

IntersectionReport set_intersection(const PlanarComplex& C1,
                                    const PlanarComplex& C2) {
  std::set<QPoint> touched;
  for (const auto& e1 : C1.edges) {
    for (const auto& e2 : C2.edges) {
      const Int det = cross(e1.dir, e2.dir);
      if (det == 0) {
        if (crossq(qsub(e2.base, e1.base), e1.dir) != 0) continue;  // parallel
        const Overlap ov = collinear_overlap(e1, e2);
        if (ov.kind == Overlap::Kind::Segment) {
          IntersectionReport rep;
          rep.kind = IntersectionReport::Kind::Infinite;
          rep.witness = {ov.a, ov.b};
          return rep;
        }
        if (ov.kind == Overlap::Kind::Point) touched.insert(ov.a);
        continue;
      }
      const QVec delta = qsub(e2.base, e1.base);
      const Rational s1 = crossq(delta, e2.dir) / Rational(det);
      const Rational s2 = crossq(delta, e1.dir) / Rational(det);
      if (in_range(range_of(e1), s1) && in_range(range_of(e2), s2))
        touched.insert(point_at(e1.base, e1.dir, s1));
    }
  }
  IntersectionReport rep;
  rep.kind = IntersectionReport::Kind::Finite;
  const std::map<QPoint, long long> stable = stable_points(C1, C2);
  for (const QPoint& p : touched) {
    const auto it = stable.find(p);
    const long long m = it == stable.end() ? 0 : it->second;
    rep.points.emplace_back(p, m);
    rep.total_multiplicity += m;
  }
  return rep;
}

IntersectionReport stable_intersection(const PlanarComplex& C1,
                                       const PlanarComplex& C2) {
  IntersectionReport rep;
  rep.kind = IntersectionReport::Kind::Finite;
  for (const auto& [p, m] : stable_points(C1, C2)) {
    if (m == 0) continue;
    rep.points.emplace_back(p, m);
    rep.total_multiplicity += m;
  }
  return rep;
}

bool point_on_complex(const PlanarComplex& C, const QPoint& p) {
  for (const auto& e : C.edges) {
    if (crossq(qsub(p, e.base), e.dir) != 0) continue;
    if (in_range(range_of(e), param_on_line(e.base, e.dir, p))) return true;
  }
  return false;
}

}  // namespace tropline
