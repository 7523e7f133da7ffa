#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tropline/rational.hpp"

namespace tropline {

// Coefficient field Q[alpha]/(m(alpha)) for a monic m of degree d >= 1.
// The degree-1 context with m = alpha is Q itself. Irreducibility of m is
// not verified up front; a reducible modulus surfaces as NotInvertible the
// first time invert() meets a zero divisor.
class FieldContext {
 public:
  // min_poly lists coefficients by ascending degree; leading coefficient
  // must be exactly 1.
  explicit FieldContext(std::vector<Rational> min_poly);

  int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
  const std::vector<Rational>& minimal_polynomial() const { return min_poly_; }

  bool same_as(const FieldContext& other) const {
    return min_poly_ == other.min_poly_;
  }

  // The rationals, as the degree-1 context with m(alpha) = alpha.
  static std::shared_ptr<const FieldContext> rationals();
  // Q(omega) with omega^2 + omega + 1 = 0.
  static std::shared_ptr<const FieldContext> omega();

 private:
  std::vector<Rational> min_poly_;
};

using ContextPtr = std::shared_ptr<const FieldContext>;

// Element of the context field in the basis 1, alpha, ..., alpha^{d-1}.
// Always stored fully reduced, so equality is componentwise.
class AlgebraicNumber {
 public:
  AlgebraicNumber(ContextPtr ctx, std::vector<Rational> coeffs);

  static AlgebraicNumber zero(const ContextPtr& ctx);
  static AlgebraicNumber one(const ContextPtr& ctx);
  static AlgebraicNumber from_rational(const ContextPtr& ctx, const Rational& r);
  // alpha itself; requires degree >= 2.
  static AlgebraicNumber generator(const ContextPtr& ctx);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  // The rational value when the element lies in Q (all higher coeffs 0).
  bool is_rational(Rational* out = nullptr) const;

  AlgebraicNumber operator-() const;
  AlgebraicNumber operator+(const AlgebraicNumber& rhs) const;
  AlgebraicNumber operator-(const AlgebraicNumber& rhs) const;
  AlgebraicNumber operator*(const AlgebraicNumber& rhs) const;

  bool operator==(const AlgebraicNumber& rhs) const;
  bool operator!=(const AlgebraicNumber& rhs) const { return !(*this == rhs); }

  std::string to_string() const;  // e.g. "1 - 2*a + a^2" (a = generator)

 private:
  ContextPtr ctx_;
  std::vector<Rational> coeffs_;  // size == degree()
};

// Reduces an arbitrary-degree polynomial in alpha (coefficients by ascending
// degree) to the canonical representative of degree < d. Idempotent.
AlgebraicNumber reduce(const std::vector<Rational>& poly, const ContextPtr& ctx);

// Multiplicative inverse via extended gcd with the minimal polynomial.
// Throws DivisionByZero on 0 and NotInvertible when the gcd is nontrivial
// (reducible modulus).
AlgebraicNumber invert(const AlgebraicNumber& a);

// Exact equality of canonical forms. Throws ContextMismatch when the two
// values live in different contexts.
bool equals(const AlgebraicNumber& a, const AlgebraicNumber& b);

}  // namespace tropline
