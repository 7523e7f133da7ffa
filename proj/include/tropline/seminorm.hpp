#pragma once

#include <tuple>

#include "tropline/puiseux.hpp"
#include "tropline/tropical.hpp"

namespace tropline {

// rho = log r for a Gauss-norm radius r in (0,1], so rho <= 0. All seminorm
// arithmetic stays in log scale over Q ∪ {-inf}; exp is never applied.
struct GaussParameter {
  Rational rho;

  explicit GaussParameter(Rational r) : rho(std::move(r)) {
    if (rho > 0) throw InvalidArgument("Gauss parameter needs rho <= 0");
  }
};

// Gauss norm precomposed with the substitution y -> phi(x).
struct CompositeSeminorm {
  KPolynomial phi;  // univariate, nonzero
  GaussParameter rho;

  CompositeSeminorm(KPolynomial phi_, GaussParameter rho_)
      : phi(std::move(phi_)), rho(rho_) {
    if (phi.variables() != 1)
      throw DimensionMismatch("substitution must be univariate");
    if (phi.is_zero()) throw InvalidArgument("zero substitution");
  }
};

// log |p|_r = max_i (nu(a_i) + i*rho) for p = sum a_i x^i; -inf iff p = 0.
TropicalValue gauss_lognorm(const KPolynomial& p, const GaussParameter& rho);

// log [f]_S = gauss_lognorm of the exact substitution f(x, phi(x)).
TropicalValue composite_lognorm(const KPolynomial& f, const CompositeSeminorm& S);

// Exact decision of agreement on every affine-linear f = a*x + b*y + c.
// Requires both substitutions to vanish in degrees 0 and 1; otherwise the
// reduction to the M-comparison is unsound and the operation refuses.
bool linear_agreement(const CompositeSeminorm& S1, const CompositeSeminorm& S2);

// The distinguishing polynomial f = phi1(x) - y together with the two values
// (always -inf under S1 and finite under S2 when phi1 != phi2).
std::tuple<KPolynomial, TropicalValue, TropicalValue> witness_difference(
    const CompositeSeminorm& S1, const CompositeSeminorm& S2);

// g(x, phi(x)) = 0 identically, i.e. the seminorm kills g.
bool vanishes_on_ideal(const CompositeSeminorm& S, const KPolynomial& g);

}  // namespace tropline
