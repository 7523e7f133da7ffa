#include "tropline/seminorm.hpp"

namespace tropline {

TropicalValue gauss_lognorm(const KPolynomial& p, const GaussParameter& rho) {
  if (p.variables() != 1)
    throw DimensionMismatch("Gauss norm expects a univariate polynomial");
  TropicalValue best = TropicalValue::minus_infinity();
  for (const auto& m : p.monomials()) {
    const TropicalValue v =
        tmul(valuation(m.coeff), TropicalValue(Rational(m.exponents[0]) * rho.rho));
    best = tadd(best, v);
  }
  return best;
}

TropicalValue composite_lognorm(const KPolynomial& f, const CompositeSeminorm& S) {
  return gauss_lognorm(compose_y(f, S.phi), S.rho);
}

namespace {

bool has_low_degree_terms(const KPolynomial& phi) {
  for (const auto& m : phi.monomials())
    if (m.exponents[0] <= 1) return true;
  return false;
}

}  // namespace

bool linear_agreement(const CompositeSeminorm& S1, const CompositeSeminorm& S2) {
  if (has_low_degree_terms(S1.phi) || has_low_degree_terms(S2.phi))
    throw CancellationRisk(
        "substitution has a degree <= 1 term; agreement on linears is not "
        "decided by the M-comparison");
  // On f = a*x + b*y + c the value is max(nu(a)+rho, nu(b)+M, nu(c)) with
  // M = gauss_lognorm(phi, rho): the three groups of monomials have distinct
  // degrees, so no cancellation is possible. Agreement for all (a,b,c) is
  // equivalent to equal rho (probe f = x) and equal M (probe f = y).
  if (S1.rho.rho != S2.rho.rho) return false;
  return gauss_lognorm(S1.phi, S1.rho) == gauss_lognorm(S2.phi, S2.rho);
}

std::tuple<KPolynomial, TropicalValue, TropicalValue> witness_difference(
    const CompositeSeminorm& S1, const CompositeSeminorm& S2) {
  if (S1.phi == S2.phi)
    throw IdenticalSubstitutions("witness requires phi1 != phi2");
  // f = phi1(x) - y
  std::vector<KPolynomial::Monomial> ms;
  for (const auto& m : S1.phi.monomials())
    ms.push_back({{m.exponents[0], 0}, m.coeff});
  ms.push_back({{0, 1},
                PuiseuxElement::from_rational(S1.phi.context(), Rational(-1))});
  KPolynomial f(2, S1.phi.context(), std::move(ms));
  const TropicalValue v1 = composite_lognorm(f, S1);
  const TropicalValue v2 = composite_lognorm(f, S2);
  return {std::move(f), v1, v2};
}

bool vanishes_on_ideal(const CompositeSeminorm& S, const KPolynomial& g) {
  return composite_lognorm(g, S).is_minus_infinity();
}

}  // namespace tropline
