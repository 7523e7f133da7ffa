#include "tropline/field.hpp"

#include <algorithm>
#include <utility>

namespace tropline {

namespace {

// Polynomials below are dense coefficient vectors by ascending degree with
// no trailing zeros (zero polynomial = empty vector).

void strip(std::vector<Rational>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const std::vector<Rational>& p) {
  return static_cast<int>(p.size()) - 1;  // -1 for the zero polynomial
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  strip(out);
  return out;
}

std::vector<Rational> poly_sub(std::vector<Rational> a,
                               const std::vector<Rational>& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  strip(a);
  return a;
}

std::vector<Rational> poly_scale(std::vector<Rational> a, const Rational& c) {
  for (auto& x : a) x *= c;
  strip(a);
  return a;
}

// Remainder of a modulo the monic m.
std::vector<Rational> poly_mod_monic(std::vector<Rational> a,
                                     const std::vector<Rational>& m) {
  const int dm = deg(m);
  while (deg(a) >= dm) {
    const Rational lead = a.back();
    const int shift = deg(a) - dm;
    for (int i = 0; i <= dm; ++i) a[shift + i] -= lead * m[i];
    strip(a);
  }
  return a;
}

// Euclidean division by an arbitrary nonzero divisor: a = q*b + r.
std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(
    std::vector<Rational> a, const std::vector<Rational>& b) {
  const int db = deg(b);
  std::vector<Rational> q;
  if (deg(a) >= db) q.assign(deg(a) - db + 1, Rational(0));
  while (deg(a) >= db) {
    const Rational c = a.back() / b.back();
    const int shift = deg(a) - db;
    q[shift] = c;
    for (int i = 0; i <= db; ++i) a[shift + i] -= c * b[i];
    strip(a);
  }
  strip(q);
  return {q, a};
}

}  // namespace

FieldContext::FieldContext(std::vector<Rational> min_poly)
    : min_poly_(std::move(min_poly)) {
  if (min_poly_.size() < 2)
    throw InvalidArgument("minimal polynomial must have degree >= 1");
  if (min_poly_.back() != 1)
    throw InvalidArgument("minimal polynomial must be monic");
}

ContextPtr FieldContext::rationals() {
  static const ContextPtr ctx = std::make_shared<FieldContext>(
      std::vector<Rational>{Rational(0), Rational(1)});
  return ctx;
}

ContextPtr FieldContext::omega() {
  static const ContextPtr ctx = std::make_shared<FieldContext>(
      std::vector<Rational>{Rational(1), Rational(1), Rational(1)});
  return ctx;
}

AlgebraicNumber::AlgebraicNumber(ContextPtr ctx, std::vector<Rational> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  if (!ctx_) throw InvalidArgument("null field context");
  if (static_cast<int>(coeffs_.size()) != ctx_->degree())
    throw InvalidArgument("coefficient count does not match context degree");
}

AlgebraicNumber AlgebraicNumber::zero(const ContextPtr& ctx) {
  return AlgebraicNumber(ctx, std::vector<Rational>(ctx->degree(), Rational(0)));
}

AlgebraicNumber AlgebraicNumber::one(const ContextPtr& ctx) {
  return from_rational(ctx, Rational(1));
}

AlgebraicNumber AlgebraicNumber::from_rational(const ContextPtr& ctx,
                                               const Rational& r) {
  std::vector<Rational> c(ctx->degree(), Rational(0));
  c[0] = r;
  return AlgebraicNumber(ctx, std::move(c));
}

AlgebraicNumber AlgebraicNumber::generator(const ContextPtr& ctx) {
  if (ctx->degree() < 2)
    throw InvalidArgument("generator requires an extension of degree >= 2");
  std::vector<Rational> c(ctx->degree(), Rational(0));
  c[1] = 1;
  return AlgebraicNumber(ctx, std::move(c));
}

bool AlgebraicNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& r) { return r == 0; });
}

bool AlgebraicNumber::is_one() const {
  if (coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& r) { return r == 0; });
}

bool AlgebraicNumber::is_rational(Rational* out) const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  if (out) *out = coeffs_[0];
  return true;
}

AlgebraicNumber AlgebraicNumber::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x = -x;
  return AlgebraicNumber(ctx_, std::move(c));
}

AlgebraicNumber AlgebraicNumber::operator+(const AlgebraicNumber& rhs) const {
  if (!ctx_->same_as(*rhs.ctx_))
    throw ContextMismatch("adding elements of different contexts");
  std::vector<Rational> c = coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += rhs.coeffs_[i];
  return AlgebraicNumber(ctx_, std::move(c));
}

AlgebraicNumber AlgebraicNumber::operator-(const AlgebraicNumber& rhs) const {
  return *this + (-rhs);
}

AlgebraicNumber AlgebraicNumber::operator*(const AlgebraicNumber& rhs) const {
  if (!ctx_->same_as(*rhs.ctx_))
    throw ContextMismatch("multiplying elements of different contexts");
  return reduce(poly_mul(coeffs_, rhs.coeffs_), ctx_);
}

bool AlgebraicNumber::operator==(const AlgebraicNumber& rhs) const {
  return equals(*this, rhs);
}

std::string AlgebraicNumber::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += coeffs_[i] > 0 ? " + " : " - ";
    else if (coeffs_[i] < 0) out += "-";
    const Rational mag = abs(coeffs_[i]);
    const bool unit = (mag == 1) && i > 0;
    if (!unit) out += tropline::to_string(mag);
    if (i >= 1) {
      if (!unit) out += "*";
      out += "a";
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

AlgebraicNumber reduce(const std::vector<Rational>& poly, const ContextPtr& ctx) {
  std::vector<Rational> p = poly;
  strip(p);
  p = poly_mod_monic(std::move(p), ctx->minimal_polynomial());
  p.resize(ctx->degree(), Rational(0));
  return AlgebraicNumber(ctx, std::move(p));
}

AlgebraicNumber invert(const AlgebraicNumber& a) {
  if (a.is_zero()) throw DivisionByZero("invert(0)");
  Rational r;
  if (a.is_rational(&r))
    return AlgebraicNumber::from_rational(a.context(), Rational(1) / r);

  // Extended Euclid: s*a + t*m = g. A unit g gives the inverse s/g.
  std::vector<Rational> r0 = a.context()->minimal_polynomial();
  std::vector<Rational> r1 = a.coeffs();
  strip(r1);
  std::vector<Rational> s0 = {}, s1 = {Rational(1)};
  while (!r1.empty()) {
    auto [q, rem] = poly_divmod(r0, r1);
    std::vector<Rational> s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (deg(r0) > 0)
    throw NotInvertible("gcd with the minimal polynomial has degree " +
                        std::to_string(deg(r0)) +
                        " (reducible context?)");
  // r0 is a nonzero constant; s0 * a = r0 (mod m).
  return reduce(poly_scale(std::move(s0), Rational(1) / r0[0]), a.context());
}

bool equals(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (!a.context()->same_as(*b.context()))
    throw ContextMismatch("comparing elements of different contexts");
  return a.coeffs() == b.coeffs();
}

}  // namespace tropline
