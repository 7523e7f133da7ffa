#include "tropline/separate.hpp"

#include <algorithm>
#include <map>

#include "tropline/rng.hpp"

namespace tropline {

namespace {

bool kpoints_equal(const KPoint& p, const KPoint& q) {
  if (p.size() != q.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!(p[i] == q[i])) return false;
  return true;
}

struct LineCoeffs {
  PuiseuxElement a, b, c;  // a*x + b*y + c
};

LineCoeffs line_coeffs(const KPolynomial& L) {
  if (L.variables() != 2)
    throw DimensionMismatch("arrangement lines live in two variables");
  const ContextPtr& ctx = L.context();
  LineCoeffs out{PuiseuxElement::zero(ctx), PuiseuxElement::zero(ctx),
                 PuiseuxElement::zero(ctx)};
  for (const auto& m : L.monomials()) {
    if (m.exponents == std::vector<int>{1, 0})
      out.a = m.coeff;
    else if (m.exponents == std::vector<int>{0, 1})
      out.b = m.coeff;
    else if (m.exponents == std::vector<int>{0, 0})
      out.c = m.coeff;
    else
      throw InvalidArgument("line polynomial is not affine-linear");
  }
  if (out.a.is_zero() && out.b.is_zero())
    throw InvalidArgument("line has zero linear part");
  return out;
}

bool proportional(const LineCoeffs& x, const LineCoeffs& y) {
  return (x.a * y.b - x.b * y.a).is_zero() &&
         (x.a * y.c - x.c * y.a).is_zero() &&
         (x.b * y.c - x.c * y.b).is_zero();
}

// Schedule pool: small elements of the coefficient field used in candidate
// forms.
std::vector<AlgebraicNumber> small_elements(const ContextPtr& ctx) {
  std::vector<AlgebraicNumber> pool;
  for (const Rational& r : {Rational(1), Rational(-1), Rational(2), Rational(-2),
                            Rational(1, 2), Rational(-1, 2)})
    pool.push_back(AlgebraicNumber::from_rational(ctx, r));
  const int d = ctx->degree();
  if (d >= 2 && d <= 4) {
    std::vector<Rational> coeffs(d, Rational(0));
    const long long total = [&] {
      long long t = 1;
      for (int i = 0; i < d; ++i) t *= 3;
      return t;
    }();
    for (long long code = 1; code < total; ++code) {
      long long c = code;
      bool higher = false;
      for (int i = 0; i < d; ++i) {
        const int digit = static_cast<int>(c % 3);
        c /= 3;
        coeffs[i] = digit == 2 ? Rational(-1) : Rational(digit);
        if (i > 0 && digit != 0) higher = true;
      }
      if (!higher) continue;  // rationals are already in the pool
      pool.emplace_back(ctx, coeffs);
    }
  }
  return pool;
}

struct Candidate {
  LinearForm u, v;
};

// Projection along the pair itself: u restricts to a constant on L_b's
// zero set shifted off zero, v likewise on L_a's. The planar images are a
// vertical and a horizontal tropical line, so this candidate certifies any
// non-parallel pair. Interleaved into the schedule as a guaranteed fallback.
Candidate make_adapted_candidate(const LineCoeffs& ca, const LineCoeffs& cb,
                                 std::uint64_t seed, int attempt,
                                 const ContextPtr& ctx) {
  SplitMix64 rng(SplitMix64::mix(seed, static_cast<std::uint64_t>(attempt)));
  const Rational eu(1 + static_cast<long long>(rng.below(4)));
  const Rational ev(1 + static_cast<long long>(rng.below(4)));
  LinearForm u{{PuiseuxFraction(cb.a), PuiseuxFraction(cb.b),
                PuiseuxFraction(cb.c + PuiseuxElement::t_power(ctx, eu))}};
  LinearForm v{{PuiseuxFraction(ca.a), PuiseuxFraction(ca.b),
                PuiseuxFraction(ca.c + PuiseuxElement::t_power(ctx, ev))}};
  return {u, v};
}

Candidate make_candidate(int attempt, std::uint64_t seed, const ContextPtr& ctx) {
  const PuiseuxFraction zero = PuiseuxFraction::zero(ctx);
  const PuiseuxFraction one = PuiseuxFraction::one(ctx);
  if (attempt == 0) {
    // the identity coordinates come first
    return {LinearForm{{one, zero, zero}}, LinearForm{{zero, one, zero}}};
  }
  SplitMix64 rng(SplitMix64::mix(seed, static_cast<std::uint64_t>(attempt)));
  static thread_local std::vector<AlgebraicNumber> pool;
  static thread_local ContextPtr pool_ctx;
  if (!pool_ctx || !pool_ctx->same_as(*ctx)) {
    pool = small_elements(ctx);
    pool_ctx = ctx;
  }
  const long long emax = 2 + attempt / 8;
  auto pick = [&]() { return pool[rng.below(pool.size())]; };
  auto tail = [&](long long extra) {
    return PuiseuxElement::monomial(pick(),
                                    Rational(1 + static_cast<long long>(
                                                     rng.below(emax + extra))));
  };
  auto mix_coeff = [&](bool favor_one) {
    // constant part: mostly 1 (or 0), sometimes another small element
    PuiseuxElement s = PuiseuxElement::zero(ctx);
    const auto roll = rng.below(4);
    if (roll <= 1)
      s = favor_one ? PuiseuxElement::from_rational(ctx, Rational(1))
                    : PuiseuxElement::zero(ctx);
    else if (roll == 2)
      s = favor_one ? PuiseuxElement::zero(ctx)
                    : PuiseuxElement::from_rational(ctx, Rational(1));
    else
      s = PuiseuxElement::constant(pick());
    return s + tail(0);
  };
  auto translation = [&]() {
    if (rng.below(2) == 0) return PuiseuxElement::zero(ctx);
    return tail(1);
  };
  const PuiseuxElement lambda = mix_coeff(true);
  const PuiseuxElement mu = mix_coeff(false);
  LinearForm u{{one, PuiseuxFraction(lambda), PuiseuxFraction(translation())}};
  LinearForm v{{PuiseuxFraction(mu), one, PuiseuxFraction(translation())}};
  return {u, v};
}

// Image of the line {L = 0} under x -> (u(x), v(x)), as a plane line with
// element coefficients (denominators cleared; scaling does not move the
// corner locus).
KPolynomial image_line(const LinearForm& u, const LinearForm& v,
                       const LineCoeffs& L, const ContextPtr& ctx) {
  const PuiseuxFraction D0{L.b};
  const PuiseuxFraction D1{-L.a};
  KPoint P0;
  if (!L.a.is_zero())
    P0 = {PuiseuxFraction(-L.c) / PuiseuxFraction(L.a), PuiseuxFraction::zero(ctx)};
  else
    P0 = {PuiseuxFraction::zero(ctx), PuiseuxFraction(-L.c) / PuiseuxFraction(L.b)};
  const PuiseuxFraction ulin = u.coeffs[0] * D0 + u.coeffs[1] * D1;
  const PuiseuxFraction vlin = v.coeffs[0] * D0 + v.coeffs[1] * D1;
  const PuiseuxFraction A = vlin;
  const PuiseuxFraction B = -ulin;
  const PuiseuxFraction C = ulin * v.evaluate(P0) - vlin * u.evaluate(P0);
  const PuiseuxElement a2 = A.num() * B.den() * C.den();
  const PuiseuxElement b2 = B.num() * A.den() * C.den();
  const PuiseuxElement c2 = C.num() * A.den() * B.den();
  return KPolynomial(2, ctx, {{{1, 0}, a2}, {{0, 1}, b2}, {{0, 0}, c2}});
}

}  // namespace

PointSet::PointSet(std::vector<KPoint> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = i + 1; j < points_.size(); ++j)
      if (kpoints_equal(points_[i], points_[j]))
        throw InvalidArgument("point set has duplicate points");
}

void validate_arrangement(const Arrangement& A) {
  std::vector<LineCoeffs> coeffs;
  coeffs.reserve(A.lines.size());
  for (const auto& L : A.lines) coeffs.push_back(line_coeffs(L));
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = i + 1; j < coeffs.size(); ++j)
      if (proportional(coeffs[i], coeffs[j]))
        throw ValidationError("lines " + std::to_string(i) + " and " +
                              std::to_string(j) + " are proportional");
  for (const auto& dp : A.declared) {
    for (int li : dp.on_lines) {
      if (li < 0 || li >= static_cast<int>(A.lines.size()))
        throw ValidationError("declared incidence references a missing line");
      if (!substitute_poly(A.lines[li], dp.point).is_zero())
        throw ValidationError("declared point is not on line " +
                              std::to_string(li));
    }
  }
}

LinearForm separating_form(const KPoint& p, const KPoint& q) {
  if (p.size() != q.size())
    throw DimensionMismatch("points live in different dimensions");
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == q[k]) continue;
    const ContextPtr& ctx = p[k].context();
    std::vector<PuiseuxFraction> coeffs(p.size() + 1, PuiseuxFraction::zero(ctx));
    coeffs[k] = PuiseuxFraction::one(ctx);
    coeffs.back() = -p[k];
    return LinearForm{std::move(coeffs)};
  }
  throw EqualPoints("cannot separate a point from itself");
}

LinearEmbedding separate_points(const PointSet& S) {
  if (S.empty())
    throw InvalidArgument("empty point set has no ambient dimension");
  const int n = static_cast<int>(S.points()[0].size());
  const ContextPtr& ctx = S.points()[0][0].context();
  return separate_points(S, LinearEmbedding::identity(n, ctx));
}

LinearEmbedding separate_points(const PointSet& S, const LinearEmbedding& prefix) {
  if (S.empty()) return prefix;
  std::vector<TropicalPoint> images;
  images.reserve(S.size());
  for (const auto& p : S.points())
    images.push_back(trop_point(apply_embedding(prefix, p)));
  std::vector<LinearForm> forms = prefix.forms();
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (std::size_t j = i + 1; j < S.size(); ++j) {
      if (!tropical_points_equal(images[i], images[j])) continue;
      const LinearForm f = separating_form(S.points()[i], S.points()[j]);
      forms.push_back(f);
      for (std::size_t k = 0; k < S.size(); ++k)
        images[k].push_back(valuation(f.evaluate(S.points()[k])));
    }
  }
  return LinearEmbedding(prefix.source_dim(), std::move(forms));
}

bool verify_intersection_points(const KPolynomial& F, const KPolynomial& G,
                                const PointSet& S,
                                const std::optional<Rational>& precision) {
  for (const auto& p : S.points()) {
    for (const KPolynomial* poly : {&F, &G}) {
      const PuiseuxFraction value = substitute_poly(*poly, p);
      if (!precision) {
        if (!value.is_zero()) return false;
      } else {
        if (!(valuation(value) < TropicalValue(*precision))) return false;
      }
    }
  }
  return true;
}

KPoint line_pair_intersection(const KPolynomial& La, const KPolynomial& Lb) {
  const LineCoeffs ca = line_coeffs(La);
  const LineCoeffs cb = line_coeffs(Lb);
  const auto sol = solve2x2({{{ca.a, ca.b}, {cb.a, cb.b}}}, {-ca.c, -cb.c});
  return {sol[0], sol[1]};
}

PairRecord pair_certificate(const KPolynomial& La, const KPolynomial& Lb,
                            const KPoint& p, std::uint64_t seed, int retries) {
  const ContextPtr& ctx = La.context();
  const LineCoeffs ca = line_coeffs(La);
  const LineCoeffs cb = line_coeffs(Lb);
  if (proportional(ca, cb))
    throw InvalidArgument("pair certificate needs non-proportional lines");
  if (!substitute_poly(La, p).is_zero() || !substitute_poly(Lb, p).is_zero())
    throw InvalidArgument("p is not the intersection point of the pair");

  std::string last_failure = "no candidate tried";
  std::map<std::string, int> failure_counts;
  for (int attempt = 0; attempt < retries; ++attempt) {
    // identity first, then generic seeded forms with every fourth attempt
    // falling back to the pair-adapted projection
    const Candidate cand = (attempt > 0 && attempt % 4 == 3)
                               ? make_adapted_candidate(ca, cb, seed, attempt, ctx)
                               : make_candidate(attempt, seed, ctx);
    auto record_failure = [&](const std::string& why) {
      last_failure = why;
      ++failure_counts[why];
    };
    if (attempt > 0) {
      // the candidate's linear part must be invertible over K
      const PuiseuxFraction det = cand.u.coeffs[0] * cand.v.coeffs[1] -
                                  cand.u.coeffs[1] * cand.v.coeffs[0];
      if (det.is_zero()) {
        record_failure("singular candidate projection");
        continue;
      }
    }
    const PuiseuxFraction up = cand.u.evaluate(p);
    const PuiseuxFraction vp = cand.v.evaluate(p);
    if (up.is_zero() || vp.is_zero()) {
      record_failure("image of the intersection point has a -inf coordinate");
      continue;
    }
    IntersectionReport rep;
    try {
      const KPolynomial ia = image_line(cand.u, cand.v, ca, ctx);
      const KPolynomial ib = image_line(cand.u, cand.v, cb, ctx);
      rep = set_intersection(corner_locus(tropicalize_poly(ia)),
                             corner_locus(tropicalize_poly(ib)));
    } catch (const Error&) {
      record_failure("degenerate planar projection");
      continue;
    }
    if (!rep.is_finite()) {
      record_failure("infinite planar overlap");
      continue;
    }
    if (rep.points.size() != 1) {
      record_failure("planar intersection has " +
                     std::to_string(rep.points.size()) + " points");
      continue;
    }
    const TropicalPoint expected = {valuation(up), valuation(vp)};
    const QPoint got = rep.points[0].first;
    if (got.x != expected[0].finite_value() ||
        got.y != expected[1].finite_value()) {
      record_failure("certified point differs from the expected image");
      continue;
    }
    if (rep.points[0].second != 1) {
      record_failure("multiplicity " + std::to_string(rep.points[0].second));
      continue;
    }
    PairRecord rec;
    rec.u = cand.u;
    rec.v = cand.v;
    rec.planar = rep;
    rec.expected = expected;
    return rec;
  }
  std::string histogram;
  for (const auto& [why, count] : failure_counts)
    histogram += "; " + std::to_string(count) + "x " + why;
  throw RetryLimitExceeded("no certifying projection within " +
                           std::to_string(retries) +
                           " attempts; last failure: " + last_failure +
                           histogram);
}

TransversalityCertificate transversalize_arrangement(const Arrangement& A,
                                                     std::uint64_t seed,
                                                     int retries) {
  validate_arrangement(A);
  const int n = static_cast<int>(A.lines.size());
  if (n == 0) throw InvalidArgument("empty arrangement");
  const ContextPtr& ctx = A.lines[0].context();

  TransversalityCertificate cert;
  cert.seed = seed;

  // all pairwise intersection points, deduplicated in discovery order
  std::vector<std::pair<std::pair<int, int>, KPoint>> pair_points;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      KPoint p = line_pair_intersection(A.lines[a], A.lines[b]);
      pair_points.push_back({{a, b}, p});
      bool known = false;
      for (const auto& q : cert.points)
        if (kpoints_equal(q, p)) known = true;
      if (!known) cert.points.push_back(p);
    }
  }

  for (const auto& [ab, p] : pair_points) {
    const auto [a, b] = ab;
    const std::uint64_t pair_seed = SplitMix64::mix(
        seed, (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b));
    try {
      PairRecord rec = pair_certificate(A.lines[a], A.lines[b], p, pair_seed, retries);
      rec.line_a = a;
      rec.line_b = b;
      cert.pairs.push_back(std::move(rec));
    } catch (const RetryLimitExceeded& e) {
      throw RetryLimitExceeded("pair (" + std::to_string(a) + "," +
                               std::to_string(b) + "): " + e.what());
    }
  }

  // assemble the embedding: identity, then every form a certificate used
  std::vector<LinearForm> forms = LinearEmbedding::identity(2, ctx).forms();
  auto index_of_or_add = [&forms](const LinearForm& f) {
    for (std::size_t i = 0; i < forms.size(); ++i)
      if (forms[i] == f) return static_cast<int>(i);
    forms.push_back(f);
    return static_cast<int>(forms.size() - 1);
  };
  for (auto& rec : cert.pairs) {
    rec.proj_u = index_of_or_add(rec.u);
    rec.proj_v = index_of_or_add(rec.v);
  }

  const LinearEmbedding prefix(2, forms);
  const PointSet S(cert.points);
  cert.embedding = separate_points(S, prefix);
  cert.separation.reserve(cert.points.size());
  for (const auto& p : cert.points)
    cert.separation.push_back(trop_point(apply_embedding(cert.embedding, p)));
  return cert;
}

namespace {

AlgebraicNumber omega_power(const ContextPtr& ctx, int k) {
  switch (((k % 3) + 3) % 3) {
    case 0:
      return AlgebraicNumber::one(ctx);
    case 1:
      return AlgebraicNumber::generator(ctx);
    default:
      return AlgebraicNumber(ctx, {Rational(-1), Rational(-1)});  // omega^2
  }
}

}  // namespace

Arrangement hessian_arrangement_in_chart(const ContextPtr& ctx, const Rational& l1,
                                         const Rational& l2, const Rational& l3) {
  const std::vector<Rational> omega_poly = {Rational(1), Rational(1), Rational(1)};
  if (ctx->minimal_polynomial() != omega_poly)
    throw InvalidArgument("Hessian arrangement needs the omega context");
  if (l3 == 0)
    throw IncidenceCheckFailed("chart functional must involve the z coordinate");

  auto rat_el = [&](const Rational& r) {
    return AlgebraicNumber::from_rational(ctx, r);
  };

  // the twelve lines: the coordinate triangle and x + w^a y + w^b z
  std::vector<std::array<AlgebraicNumber, 3>> plines;
  plines.push_back({rat_el(Rational(1)), rat_el(Rational(0)), rat_el(Rational(0))});
  plines.push_back({rat_el(Rational(0)), rat_el(Rational(1)), rat_el(Rational(0))});
  plines.push_back({rat_el(Rational(0)), rat_el(Rational(0)), rat_el(Rational(1))});
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      plines.push_back({rat_el(Rational(1)), omega_power(ctx, a),
                        omega_power(ctx, b)});

  // the nine base points (inflection points of the pencil)
  std::vector<std::array<AlgebraicNumber, 3>> ppoints;
  for (int k = 0; k < 3; ++k)
    ppoints.push_back({rat_el(Rational(0)), rat_el(Rational(1)),
                       -omega_power(ctx, k)});
  for (int k = 0; k < 3; ++k)
    ppoints.push_back({rat_el(Rational(1)), rat_el(Rational(0)),
                       -omega_power(ctx, k)});
  for (int k = 0; k < 3; ++k)
    ppoints.push_back({rat_el(Rational(1)), -omega_power(ctx, k),
                       rat_el(Rational(0))});

  Arrangement arr;
  for (const auto& [a, b, c] : plines) {
    // chart l1 x + l2 y + l3 z = 1: the affine form (a l3 - c l1) x +
    // (b l3 - c l2) y + c, scaled by l3
    const AlgebraicNumber fa = a * rat_el(l3) - c * rat_el(l1);
    const AlgebraicNumber fb = b * rat_el(l3) - c * rat_el(l2);
    if (fa.is_zero() && fb.is_zero())
      throw IncidenceCheckFailed("chart sends a line of the pencil to infinity");
    arr.lines.push_back(KPolynomial(
        2, ctx,
        {{{1, 0}, PuiseuxElement::constant(fa)},
         {{0, 1}, PuiseuxElement::constant(fb)},
         {{0, 0}, PuiseuxElement::constant(c)}}));
  }

  for (const auto& [x, y, z] : ppoints) {
    const AlgebraicNumber ell =
        x * rat_el(l1) + y * rat_el(l2) + z * rat_el(l3);
    if (ell.is_zero())
      throw IncidenceCheckFailed("chart sends a base point to infinity");
    const AlgebraicNumber inv = invert(ell);
    Arrangement::DeclaredPoint dp;
    dp.point = {PuiseuxFraction(PuiseuxElement::constant(x * inv)),
                PuiseuxFraction(PuiseuxElement::constant(y * inv))};
    for (int li = 0; li < static_cast<int>(arr.lines.size()); ++li)
      if (substitute_poly(arr.lines[li], dp.point).is_zero())
        dp.on_lines.push_back(li);
    arr.declared.push_back(std::move(dp));
  }

  // incidence oracle: (lines, points, lines-per-point, points-per-line)
  // must be (12, 9, 4, 3), with substitution already verified above
  if (arr.lines.size() != 12 || arr.declared.size() != 9)
    throw IncidenceCheckFailed("expected 12 lines and 9 base points");
  std::vector<int> per_line(arr.lines.size(), 0);
  for (const auto& dp : arr.declared) {
    if (static_cast<int>(dp.on_lines.size()) != 4)
      throw IncidenceCheckFailed("a base point is not on exactly 4 lines");
    for (int li : dp.on_lines) ++per_line[li];
  }
  for (int count : per_line)
    if (count != 3)
      throw IncidenceCheckFailed("a line is not through exactly 3 base points");
  for (std::size_t i = 0; i < arr.declared.size(); ++i)
    for (std::size_t j = i + 1; j < arr.declared.size(); ++j)
      if (kpoints_equal(arr.declared[i].point, arr.declared[j].point))
        throw IncidenceCheckFailed("duplicate base point");
  try {
    validate_arrangement(arr);
  } catch (const Error& e) {
    throw IncidenceCheckFailed(e.what());
  }
  return arr;
}

Arrangement hessian_arrangement(const ContextPtr& ctx) {
  return hessian_arrangement_in_chart(ctx, Rational(1), Rational(2), Rational(4));
}

std::string hessian_realizability_note() {
  return "The (4,3)-net is realizable over the complex numbers: this "
         "certificate exhibits a transversal tropical model of the Hessian "
         "configuration. Its non-realizability over the reals (no real 4-net "
         "exists) is cited from the line-arrangement literature and is not "
         "verified computationally here.";
}

}  // namespace tropline
