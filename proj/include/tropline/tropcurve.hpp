#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "tropline/puiseux.hpp"
#include "tropline/tropical.hpp"

namespace tropline {

struct QPoint {
  Rational x, y;
  friend bool operator==(const QPoint& a, const QPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const QPoint& a, const QPoint& b) { return !(a == b); }
  friend bool operator<(const QPoint& a, const QPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

using LatticeVec = std::array<Int, 2>;  // exponent/direction lattice vectors

// Max-plus polynomial on Q^2: value at p is max over the support of
// coeff + i*x + j*y. Support exponents are distinct, coefficients finite,
// support nonempty.
class TropicalPolynomial {
 public:
  struct Term {
    LatticeVec exp;
    Rational coeff;
  };

  explicit TropicalPolynomial(std::vector<Term> support);

  const std::vector<Term>& support() const { return support_; }
  Int degree() const;  // max(i + j)

 private:
  std::vector<Term> support_;
};

// One-dimensional polyhedral complex in Q^2. Edges are segments between two
// vertices, rays from one vertex, or full lines (which carry their own base
// point). Directions are primitive integer vectors; rays point away from
// their vertex; segment directions point tail -> head.
struct PlanarComplex {
  struct Edge {
    enum class Kind { Segment, Ray, Line };
    Kind kind = Kind::Segment;
    int tail = -1;  // vertex index; -1 when the end is unbounded
    int head = -1;
    QPoint base;           // == vertices[tail] for segments and rays
    LatticeVec dir;        // primitive
    Rational length;       // segments only: head point = base + length*dir
    long long multiplicity = 1;
    std::array<LatticeVec, 2> dual;  // endpoints of the dual subdivision edge
  };

  std::vector<QPoint> vertices;
  std::vector<Edge> edges;
};

// Finite: list of distinct points with multiplicities. Infinite: witnessed
// by two distinct points of a shared positive-length segment.
struct IntersectionReport {
  enum class Kind { Finite, Infinite };
  Kind kind = Kind::Finite;
  std::vector<std::pair<QPoint, long long>> points;
  std::optional<std::pair<QPoint, QPoint>> witness;
  long long total_multiplicity = 0;

  bool is_finite() const { return kind == Kind::Finite; }
};

// Coefficientwise valuation of a plane-curve polynomial. Throws
// ZeroPolynomial when F has no monomials.
TropicalPolynomial tropicalize_poly(const KPolynomial& F);

// Value and full maximizer set at p; p lies on the tropical curve iff the
// argmax has at least two elements.
std::pair<Rational, std::vector<LatticeVec>> eval_with_argmax(
    const TropicalPolynomial& F, const QPoint& p);

// Corner locus as the dual of the regular subdivision induced by the
// coefficient lifting. Throws DegenerateSupport on single-monomial input.
PlanarComplex corner_locus(const TropicalPolynomial& F);

// Exact polyhedral intersection. Finite points carry their local stable
// multiplicities (the displacement-limit mass at each point).
IntersectionReport set_intersection(const PlanarComplex& C1,
                                    const PlanarComplex& C2);

// Stable intersection: limit of C1 cap (C2 + eps*v) for a deterministic
// generic rational direction v; always Finite, total = mixed volume of the
// dual Newton polygons.
IntersectionReport stable_intersection(const PlanarComplex& C1,
                                       const PlanarComplex& C2);

// True when p lies on some edge of C (exact test, used by checks and tests).
bool point_on_complex(const PlanarComplex& C, const QPoint& p);

}  // namespace tropline
