#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "tropline/field.hpp"
#include "tropline/tropical.hpp"

namespace tropline {

// Finite-support element of the Puiseux field: sum of c * t^q with rational
// exponents q strictly increasing and no zero coefficients. The empty term
// list is 0. Sign convention everywhere: nu(t^q) = -q, nu(0) = -inf.
class PuiseuxElement {
 public:
  struct Term {
    Rational exponent;
    AlgebraicNumber coeff;
  };

  explicit PuiseuxElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  // Normalizes: sorts, merges equal exponents, drops zero coefficients.
  PuiseuxElement(ContextPtr ctx, std::vector<Term> terms);

  static PuiseuxElement zero(const ContextPtr& ctx) { return PuiseuxElement(ctx); }
  static PuiseuxElement constant(const AlgebraicNumber& c);
  static PuiseuxElement from_rational(const ContextPtr& ctx, const Rational& r);
  // c * t^q
  static PuiseuxElement monomial(const AlgebraicNumber& c, const Rational& q);
  // t^q over the given context
  static PuiseuxElement t_power(const ContextPtr& ctx, const Rational& q);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PuiseuxElement operator-() const;
  PuiseuxElement operator+(const PuiseuxElement& rhs) const;
  PuiseuxElement operator-(const PuiseuxElement& rhs) const;
  PuiseuxElement operator*(const PuiseuxElement& rhs) const;

  bool operator==(const PuiseuxElement& rhs) const;
  bool operator!=(const PuiseuxElement& rhs) const { return !(*this == rhs); }

  std::string to_string() const;

 private:
  ContextPtr ctx_;
  std::vector<Term> terms_;
};

// Formal quotient num/den with den != 0. Never reduced; equality and
// valuation go through cross-multiplication.
class PuiseuxFraction {
 public:
  explicit PuiseuxFraction(PuiseuxElement num);  // num / 1
  PuiseuxFraction(PuiseuxElement num, PuiseuxElement den);

  static PuiseuxFraction zero(const ContextPtr& ctx);
  static PuiseuxFraction one(const ContextPtr& ctx);

  const PuiseuxElement& num() const { return num_; }
  const PuiseuxElement& den() const { return den_; }
  const ContextPtr& context() const { return num_.context(); }
  bool is_zero() const { return num_.is_zero(); }

  PuiseuxFraction operator-() const;
  PuiseuxFraction operator+(const PuiseuxFraction& rhs) const;
  PuiseuxFraction operator-(const PuiseuxFraction& rhs) const;
  PuiseuxFraction operator*(const PuiseuxFraction& rhs) const;
  PuiseuxFraction operator/(const PuiseuxFraction& rhs) const;  // DivisionByZero

  bool operator==(const PuiseuxFraction& rhs) const;
  bool operator!=(const PuiseuxFraction& rhs) const { return !(*this == rhs); }

  std::string to_string() const;

 private:
  PuiseuxElement num_;
  PuiseuxElement den_;
};

// Point of K^n.
using KPoint = std::vector<PuiseuxFraction>;

// Polynomial in K[z_1..z_n]: distinct exponent tuples, no zero coefficients.
class KPolynomial {
 public:
  struct Monomial {
    std::vector<int> exponents;  // length == variable count
    PuiseuxElement coeff;
  };

  KPolynomial(int variables, ContextPtr ctx)
      : variables_(variables), ctx_(std::move(ctx)) {}
  // Normalizes: merges duplicate exponent tuples, drops zeros, sorts.
  KPolynomial(int variables, ContextPtr ctx, std::vector<Monomial> monomials);

  int variables() const { return variables_; }
  const ContextPtr& context() const { return ctx_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  bool is_zero() const { return monomials_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial

  KPolynomial operator+(const KPolynomial& rhs) const;
  KPolynomial operator-() const;
  KPolynomial operator-(const KPolynomial& rhs) const;
  KPolynomial operator*(const KPolynomial& rhs) const;
  bool operator==(const KPolynomial& rhs) const;

  std::string to_string() const;

 private:
  int variables_;
  ContextPtr ctx_;
  std::vector<Monomial> monomials_;
};

// nu(0) = -inf; otherwise -(least exponent with nonzero coefficient).
TropicalValue valuation(const PuiseuxElement& f);
// nu(num) - nu(den).
TropicalValue valuation(const PuiseuxFraction& f);

// Exact product (same as operator*, kept as the named operation).
PuiseuxElement multiply(const PuiseuxElement& f, const PuiseuxElement& g);

// Cramer solution of A x = b; SingularSystem when det(A) = 0.
std::array<PuiseuxFraction, 2> solve2x2(
    const std::array<std::array<PuiseuxElement, 2>, 2>& A,
    const std::array<PuiseuxElement, 2>& b);

// Exact evaluation of F at a point with fraction coordinates.
PuiseuxFraction substitute_poly(const KPolynomial& F, const KPoint& p);

// f(x, phi(x)) for f in K[x,y] and a univariate phi: the substitution used
// by composite seminorms.
KPolynomial compose_y(const KPolynomial& f, const KPolynomial& phi);

// Coordinatewise valuation K^n -> T^n.
TropicalPoint trop_point(const KPoint& p);

}  // namespace tropline
