#pragma once

#include <string>
#include <vector>

#include "tropline/separate.hpp"

namespace tropline::certcheck {

// Planar common locus of two max-plus supports computed by enumerating
// argmax-pair tie systems — an algorithm independent of the corner-locus /
// polyhedral-edge route used by the search.
struct TieIntersection {
  bool infinite = false;
  std::vector<QPoint> points;        // finite case, sorted
  std::array<QPoint, 2> witness{};   // infinite case: two distinct points
};

TieIntersection tie_planar_intersection(
    const std::vector<TropicalPolynomial::Term>& F,
    const std::vector<TropicalPolynomial::Term>& G);

struct CheckResult {
  bool ok = true;
  std::vector<std::string> failures;
};

// Re-derives everything a pair record claims from the two lines alone:
// the intersection point (own elimination), the image lines (two-point
// construction), their tropicalizations, and the full planar common locus
// (tie enumeration). Returns human-readable failures; empty means accepted.
std::vector<std::string> check_pair(const KPolynomial& La, const KPolynomial& Lb,
                                    const PairRecord& rec);

// Full independent verification of a transversality certificate against its
// arrangement: every pair record, the embedding layout, and the separation
// images recomputed from scratch.
CheckResult check_certificate(const Arrangement& A,
                              const TransversalityCertificate& cert);

}  // namespace tropline::certcheck
