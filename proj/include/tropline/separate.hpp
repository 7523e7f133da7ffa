#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropline/tropcurve.hpp"
#include "tropline/troplinear.hpp"

namespace tropline {

// Finite set of pairwise distinct points of K^n.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<KPoint> points);

  const std::vector<KPoint>& points() const { return points_; }
  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }

 private:
  std::vector<KPoint> points_;
};

// Line arrangement in A^2 over K, with optional declared base points.
struct Arrangement {
  struct DeclaredPoint {
    KPoint point;
    std::vector<int> on_lines;  // indices into `lines`
  };

  std::vector<KPolynomial> lines;  // affine-linear, pairwise non-proportional
  std::vector<DeclaredPoint> declared;
};

// Verifies arrangement invariants (degree-1 forms with nonzero linear part,
// pairwise non-proportional, declared incidences vanish under substitution).
void validate_arrangement(const Arrangement& A);

// One certified line pair: two forms (u, v) whose planar tropicalizations of
// the image lines meet exactly at the image of the true intersection point.
struct PairRecord {
  int line_a = -1, line_b = -1;
  LinearForm u, v;
  int proj_u = -1, proj_v = -1;  // indices of u, v in the certificate embedding
  IntersectionReport planar;     // Finite([(expected, 1)])
  TropicalPoint expected;        // (nu(u(p)), nu(v(p)))
};

struct TransversalityCertificate {
  LinearEmbedding embedding{2, {}};  // identity ++ pair forms ++ separators
  std::vector<PairRecord> pairs;
  std::vector<KPoint> points;             // deduplicated intersection points
  std::vector<TropicalPoint> separation;  // their images under `embedding`
  std::uint64_t seed = 0;
};

// f with f(p) = 0 and f(q) != 0: z_k - p_k for the least k with p_k != q_k.
LinearForm separating_form(const KPoint& p, const KPoint& q);

// Identity coordinates plus one separating form per pair whose tropical
// images still coincide under the prefix built so far (lexicographic pair
// order). The returned embedding sends the points to pairwise distinct
// tropical points.
LinearEmbedding separate_points(const PointSet& S);
LinearEmbedding separate_points(const PointSet& S, const LinearEmbedding& prefix);

// Every point of S lies on both hypersurfaces, exactly; with a precision
// threshold, accepts truncated points whose residuals have valuation below
// the threshold.
bool verify_intersection_points(const KPolynomial& F, const KPolynomial& G,
                                const PointSet& S,
                                const std::optional<Rational>& precision = {});

// Intersection point of two non-proportional affine lines (Cramer).
KPoint line_pair_intersection(const KPolynomial& La, const KPolynomial& Lb);

// Searches the seeded form schedule (identity first) for a planar projection
// certifying the transversal crossing of the two lines at p. Throws
// RetryLimitExceeded after `retries` candidates, reporting the last failure.
PairRecord pair_certificate(const KPolynomial& La, const KPolynomial& Lb,
                            const KPoint& p, std::uint64_t seed,
                            int retries = 64);

// Full certificate for an arrangement: pair certificates for every line
// pair, an assembled embedding, and a separating image for every
// intersection point. Deterministic in (A, seed).
TransversalityCertificate transversalize_arrangement(const Arrangement& A,
                                                     std::uint64_t seed,
                                                     int retries = 64);

// The twelve lines of the four singular members of the Hesse pencil in a
// fixed affine chart, with the nine base points attached and the incidence
// counts (12, 9, 4, 3) verified by substitution.
Arrangement hessian_arrangement(const ContextPtr& ctx);

// Same construction in an arbitrary chart hyperplane l1*x + l2*y + l3*z = 1
// (exposed for the chart guard: a chart that degenerates a line fails the
// incidence oracle).
Arrangement hessian_arrangement_in_chart(const ContextPtr& ctx, const Rational& l1,
                                         const Rational& l2, const Rational& l3);

// The realizability asymmetry recorded with Hessian reports: the complex
// side is certified here, the real side is a literature citation.
std::string hessian_realizability_note();

}  // namespace tropline
