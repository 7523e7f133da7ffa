#include "tropline/certcheck.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace tropline::certcheck {

namespace {

using Term = TropicalPolynomial::Term;

// --- self-contained line algebra (no solve2x2 / image_line reuse) ----------

struct Abc {
  PuiseuxFraction a, b, c;
};

Abc coeffs_of(const KPolynomial& L) {
  const ContextPtr& ctx = L.context();
  Abc out{PuiseuxFraction::zero(ctx), PuiseuxFraction::zero(ctx),
          PuiseuxFraction::zero(ctx)};
  for (const auto& m : L.monomials()) {
    if (m.exponents == std::vector<int>{1, 0})
      out.a = PuiseuxFraction(m.coeff);
    else if (m.exponents == std::vector<int>{0, 1})
      out.b = PuiseuxFraction(m.coeff);
    else if (m.exponents == std::vector<int>{0, 0})
      out.c = PuiseuxFraction(m.coeff);
    else
      throw InvalidArgument("checker expects affine-linear lines");
  }
  return out;
}

PuiseuxFraction eval_form(const LinearForm& f, const KPoint& p) {
  PuiseuxFraction acc = f.coeffs.back();
  for (std::size_t i = 0; i < p.size(); ++i) acc = acc + f.coeffs[i] * p[i];
  return acc;
}

// Intersection by substitution/elimination.
std::optional<KPoint> solve_lines(const KPolynomial& La, const KPolynomial& Lb) {
  const Abc p = coeffs_of(La);
  const Abc q = coeffs_of(Lb);
  const ContextPtr& ctx = La.context();
  if (!p.a.is_zero()) {
    // x = -(b1 y + c1)/a1 into L2: (a1 b2 - a2 b1) y = a2 c1 - a1 c2
    const PuiseuxFraction lead = p.a * q.b - q.a * p.b;
    if (lead.is_zero()) return std::nullopt;
    const PuiseuxFraction y = (q.a * p.c - p.a * q.c) / lead;
    const PuiseuxFraction x = -(p.b * y + p.c) / p.a;
    return KPoint{x, y};
  }
  if (p.b.is_zero()) return std::nullopt;  // not a line
  const PuiseuxFraction y = -p.c / p.b;
  if (q.a.is_zero()) return std::nullopt;  // both horizontal: parallel
  const PuiseuxFraction x = -(q.b * y + q.c) / q.a;
  (void)ctx;
  return KPoint{x, y};
}

// Image of {L = 0} under x -> (u(x), v(x)) through two sample points.
std::optional<std::vector<Term>> image_line_terms(const LinearForm& u,
                                                  const LinearForm& v,
                                                  const KPolynomial& L) {
  const Abc l = coeffs_of(L);
  const ContextPtr& ctx = L.context();
  KPoint P0, P1;
  if (!l.a.is_zero()) {
    P0 = {-l.c / l.a, PuiseuxFraction::zero(ctx)};
  } else if (!l.b.is_zero()) {
    P0 = {PuiseuxFraction::zero(ctx), -l.c / l.b};
  } else {
    return std::nullopt;
  }
  // second point: P0 + (b, -a)
  P1 = {P0[0] + l.b, P0[1] - l.a};
  const KPoint Q0 = {eval_form(u, P0), eval_form(v, P0)};
  const KPoint Q1 = {eval_form(u, P1), eval_form(v, P1)};
  // line through Q0 and Q1: (y0-y1) U + (x1-x0) V + (x0 y1 - x1 y0) = 0
  const PuiseuxFraction A = Q0[1] - Q1[1];
  const PuiseuxFraction B = Q1[0] - Q0[0];
  const PuiseuxFraction C = Q0[0] * Q1[1] - Q1[0] * Q0[1];
  if (A.is_zero() && B.is_zero()) return std::nullopt;  // collapsed image
  std::vector<Term> terms;
  if (!A.is_zero()) terms.push_back({{Int(1), Int(0)}, valuation(A).finite_value()});
  if (!B.is_zero()) terms.push_back({{Int(0), Int(1)}, valuation(B).finite_value()});
  if (!C.is_zero()) terms.push_back({{Int(0), Int(0)}, valuation(C).finite_value()});
  return terms;
}

Rational term_value(const Term& t, const QPoint& p) {
  return t.coeff + Rational(t.exp[0]) * p.x + Rational(t.exp[1]) * p.y;
}

bool attains_max(const std::vector<Term>& F, const QPoint& p, std::size_t idx) {
  const Rational v = term_value(F[idx], p);
  for (const auto& t : F)
    if (term_value(t, p) > v) return false;
  return true;
}

bool on_curve(const std::vector<Term>& F, const QPoint& p) {
  Rational best = term_value(F[0], p);
  int count = 1;
  for (std::size_t i = 1; i < F.size(); ++i) {
    const Rational v = term_value(F[i], p);
    if (v > best) {
      best = v;
      count = 1;
    } else if (v == best) {
      ++count;
    }
  }
  return count >= 2;
}

struct IntervalBound {
  std::optional<Rational> lo, hi;
  bool infeasible = false;

  void add(const Rational& K, const Rational& M) {
    // constraint K + M*s <= 0
    if (M == 0) {
      if (K > 0) infeasible = true;
      return;
    }
    const Rational bound = -K / M;
    if (M > 0) {
      if (!hi || bound < *hi) hi = bound;
    } else {
      if (!lo || bound > *lo) lo = bound;
    }
  }
};

}  // namespace

TieIntersection tie_planar_intersection(const std::vector<Term>& F,
                                        const std::vector<Term>& G) {
  TieIntersection out;
  std::set<QPoint> pts;
  for (std::size_t s = 0; s < F.size(); ++s) {
    for (std::size_t t = s + 1; t < F.size(); ++t) {
      // tie: (i_s - i_t) x + (j_s - j_t) y = c_t - c_s
      const Rational a1(F[s].exp[0] - F[t].exp[0]);
      const Rational b1(F[s].exp[1] - F[t].exp[1]);
      const Rational d1 = F[t].coeff - F[s].coeff;
      for (std::size_t uu = 0; uu < G.size(); ++uu) {
        for (std::size_t ww = uu + 1; ww < G.size(); ++ww) {
          const Rational a2(G[uu].exp[0] - G[ww].exp[0]);
          const Rational b2(G[uu].exp[1] - G[ww].exp[1]);
          const Rational d2 = G[ww].coeff - G[uu].coeff;
          const Rational det = a1 * b2 - b1 * a2;
          if (det != 0) {
            const QPoint p{(d1 * b2 - d2 * b1) / det, (a1 * d2 - a2 * d1) / det};
            if (attains_max(F, p, s) && attains_max(G, p, uu)) pts.insert(p);
            continue;
          }
          // parallel tie lines: only a coincident pair contributes
          if (a1 * d2 - a2 * d1 != 0 || b1 * d2 - b2 * d1 != 0) continue;
          // parametrize a1 x + b1 y = d1 as base + s*(-b1, a1)
          const QPoint base = b1 != 0 ? QPoint{Rational(0), d1 / b1}
                                      : QPoint{d1 / a1, Rational(0)};
          const QPoint dir{-b1, a1};
          IntervalBound iv;
          auto constrain = [&](const std::vector<Term>& P, std::size_t top) {
            const Term& m = P[top];
            for (const auto& r : P) {
              // value_r - value_top <= 0 along base + s*dir
              const Rational di(r.exp[0] - m.exp[0]);
              const Rational dj(r.exp[1] - m.exp[1]);
              const Rational K =
                  (r.coeff - m.coeff) + di * base.x + dj * base.y;
              const Rational M = di * dir.x + dj * dir.y;
              iv.add(K, M);
            }
          };
          constrain(F, s);
          constrain(G, uu);
          if (iv.infeasible) continue;
          if (iv.lo && iv.hi) {
            if (*iv.lo > *iv.hi) continue;
            if (*iv.lo == *iv.hi) {
              const QPoint p{base.x + *iv.lo * dir.x, base.y + *iv.lo * dir.y};
              pts.insert(p);
              continue;
            }
          }
          // positive-length (possibly unbounded) common segment
          const Rational sa = iv.lo ? *iv.lo : (iv.hi ? *iv.hi - 1 : Rational(0));
          const Rational sb = iv.hi ? *iv.hi : sa + 1;
          out.infinite = true;
          out.witness = {QPoint{base.x + sa * dir.x, base.y + sa * dir.y},
                         QPoint{base.x + sb * dir.x, base.y + sb * dir.y}};
          return out;
        }
      }
    }
  }
  out.points.assign(pts.begin(), pts.end());
  return out;
}

std::vector<std::string> check_pair(const KPolynomial& La, const KPolynomial& Lb,
                                    const PairRecord& rec) {
  std::vector<std::string> fails;
  auto fail = [&fails](std::string m) { fails.push_back(std::move(m)); };

  const auto point = solve_lines(La, Lb);
  if (!point) {
    fail("lines are parallel or degenerate");
    return fails;
  }
  if (!substitute_poly(La, *point).is_zero() ||
      !substitute_poly(Lb, *point).is_zero()) {
    fail("recomputed point fails substitution");
    return fails;
  }

  const TropicalValue eu = valuation(eval_form(rec.u, *point));
  const TropicalValue ev = valuation(eval_form(rec.v, *point));
  if (!eu.is_finite() || !ev.is_finite()) {
    fail("image of the intersection point is not finite");
    return fails;
  }
  if (rec.expected.size() != 2 || rec.expected[0] != eu || rec.expected[1] != ev)
    fail("expected point does not match the recomputed image");

  const auto FA = image_line_terms(rec.u, rec.v, La);
  const auto FB = image_line_terms(rec.u, rec.v, Lb);
  if (!FA || !FB) {
    fail("projection collapses a line");
    return fails;
  }
  const QPoint q{eu.finite_value(), ev.finite_value()};
  if (!on_curve(*FA, q) || !on_curve(*FB, q))
    fail("expected point is not on both planar tropicalizations");

  const TieIntersection tie = tie_planar_intersection(*FA, *FB);
  if (tie.infinite) {
    fail("planar tropicalizations share a segment");
    return fails;
  }
  if (tie.points.size() != 1 || !(tie.points[0] == q))
    fail("planar common locus is not exactly the expected point");

  // record content: Finite([(q, 1)]). For two degree-one tropical lines a
  // finite common locus carries total stable multiplicity 1, concentrated
  // at its single point.
  if (!rec.planar.is_finite() || rec.planar.points.size() != 1 ||
      !(rec.planar.points[0].first == q) || rec.planar.points[0].second != 1 ||
      rec.planar.total_multiplicity != 1)
    fail("pair record does not claim Finite([(expected, 1)])");
  return fails;
}

CheckResult check_certificate(const Arrangement& A,
                              const TransversalityCertificate& cert) {
  CheckResult out;
  auto fail = [&out](std::string m) {
    out.ok = false;
    out.failures.push_back(std::move(m));
  };

  const int n = static_cast<int>(A.lines.size());
  if (static_cast<int>(cert.pairs.size()) != n * (n - 1) / 2)
    fail("certificate does not cover every line pair");

  // embedding must start with the identity coordinates
  if (cert.embedding.source_dim() != 2 || cert.embedding.target_dim() < 2) {
    fail("embedding is not an embedding of the plane");
    return out;
  }
  const ContextPtr& ctx = A.lines.empty() ? FieldContext::rationals()
                                          : A.lines[0].context();
  const LinearForm z1 = LinearForm::coordinate(2, 0, ctx);
  const LinearForm z2 = LinearForm::coordinate(2, 1, ctx);
  if (!(cert.embedding.forms()[0] == z1) || !(cert.embedding.forms()[1] == z2))
    fail("embedding does not contain the identity coordinates");

  // recompute the deduplicated intersection point list in pair order
  std::vector<KPoint> pts;
  std::set<std::pair<int, int>> seen_pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const auto p = solve_lines(A.lines[a], A.lines[b]);
      if (!p) {
        fail("lines " + std::to_string(a) + "," + std::to_string(b) +
             " have no transversal intersection");
        continue;
      }
      bool known = false;
      for (const auto& q : pts) {
        if (q.size() == p->size() && q[0] == (*p)[0] && q[1] == (*p)[1])
          known = true;
      }
      if (!known) pts.push_back(*p);
    }
  }
  if (pts.size() != cert.points.size()) {
    fail("certificate point list has wrong size");
  } else {
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (!(pts[i][0] == cert.points[i][0] && pts[i][1] == cert.points[i][1]))
        fail("certificate point " + std::to_string(i) + " differs");
  }

  // separation images, recomputed and pairwise distinct
  if (cert.separation.size() != pts.size()) {
    fail("separation image count differs from point count");
  } else {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      TropicalPoint img;
      for (const auto& f : cert.embedding.forms())
        img.push_back(valuation(eval_form(f, pts[i])));
      if (!tropical_points_equal(img, cert.separation[i]))
        fail("separation image " + std::to_string(i) + " differs");
    }
    for (std::size_t i = 0; i < cert.separation.size(); ++i)
      for (std::size_t j = i + 1; j < cert.separation.size(); ++j)
        if (tropical_points_equal(cert.separation[i], cert.separation[j]))
          fail("separation images " + std::to_string(i) + " and " +
               std::to_string(j) + " coincide");
  }

  for (const auto& rec : cert.pairs) {
    const std::string tag =
        "pair (" + std::to_string(rec.line_a) + "," + std::to_string(rec.line_b) + "): ";
    if (rec.line_a < 0 || rec.line_b <= rec.line_a || rec.line_b >= n) {
      fail(tag + "bad line indices");
      continue;
    }
    if (!seen_pairs.insert({rec.line_a, rec.line_b}).second)
      fail(tag + "duplicate pair record");
    if (rec.proj_u < 0 || rec.proj_u >= cert.embedding.target_dim() ||
        rec.proj_v < 0 || rec.proj_v >= cert.embedding.target_dim()) {
      fail(tag + "projection indices out of range");
      continue;
    }
    if (!(cert.embedding.forms()[rec.proj_u] == rec.u) ||
        !(cert.embedding.forms()[rec.proj_v] == rec.v))
      fail(tag + "projection indices do not point at the record's forms");
    for (const std::string& m :
         check_pair(A.lines[rec.line_a], A.lines[rec.line_b], rec))
      fail(tag + m);
  }
  return out;
}

}  // namespace tropline::certcheck
