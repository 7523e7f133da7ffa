#include "tropline/puiseux.hpp"

#include <algorithm>
#include <map>

namespace tropline {

namespace {

void require_same_context(const ContextPtr& a, const ContextPtr& b,
                          const char* what) {
  if (!a->same_as(*b)) throw ContextMismatch(what);
}

}  // namespace

PuiseuxElement::PuiseuxElement(ContextPtr ctx, std::vector<Term> terms)
    : ctx_(std::move(ctx)) {
  std::map<Rational, AlgebraicNumber> acc;
  for (auto& t : terms) {
    require_same_context(ctx_, t.coeff.context(), "term coefficient context");
    auto it = acc.find(t.exponent);
    if (it == acc.end())
      acc.emplace(t.exponent, t.coeff);
    else
      it->second = it->second + t.coeff;
  }
  terms_.reserve(acc.size());
  for (auto& [q, c] : acc)
    if (!c.is_zero()) terms_.push_back(Term{q, c});
}

PuiseuxElement PuiseuxElement::constant(const AlgebraicNumber& c) {
  return PuiseuxElement(c.context(), {Term{Rational(0), c}});
}

PuiseuxElement PuiseuxElement::from_rational(const ContextPtr& ctx,
                                             const Rational& r) {
  return constant(AlgebraicNumber::from_rational(ctx, r));
}

PuiseuxElement PuiseuxElement::monomial(const AlgebraicNumber& c,
                                        const Rational& q) {
  return PuiseuxElement(c.context(), {Term{q, c}});
}

PuiseuxElement PuiseuxElement::t_power(const ContextPtr& ctx, const Rational& q) {
  return monomial(AlgebraicNumber::one(ctx), q);
}

PuiseuxElement PuiseuxElement::operator-() const {
  PuiseuxElement out(ctx_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(Term{t.exponent, -t.coeff});
  return out;
}

PuiseuxElement PuiseuxElement::operator+(const PuiseuxElement& rhs) const {
  require_same_context(ctx_, rhs.ctx_, "adding Puiseux elements");
  PuiseuxElement out(ctx_);
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() ||
        (a != terms_.end() && a->exponent < b->exponent)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->exponent < a->exponent) {
      out.terms_.push_back(*b++);
    } else {
      AlgebraicNumber c = a->coeff + b->coeff;
      if (!c.is_zero()) out.terms_.push_back(Term{a->exponent, c});
      ++a;
      ++b;
    }
  }
  return out;
}

PuiseuxElement PuiseuxElement::operator-(const PuiseuxElement& rhs) const {
  return *this + (-rhs);
}

PuiseuxElement PuiseuxElement::operator*(const PuiseuxElement& rhs) const {
  require_same_context(ctx_, rhs.ctx_, "multiplying Puiseux elements");
  std::map<Rational, AlgebraicNumber> acc;
  for (const auto& a : terms_) {
    for (const auto& b : rhs.terms_) {
      const Rational q = a.exponent + b.exponent;
      AlgebraicNumber c = a.coeff * b.coeff;
      auto it = acc.find(q);
      if (it == acc.end())
        acc.emplace(q, std::move(c));
      else
        it->second = it->second + c;
    }
  }
  PuiseuxElement out(ctx_);
  for (auto& [q, c] : acc)
    if (!c.is_zero()) out.terms_.push_back(Term{q, c});
  return out;
}

bool PuiseuxElement::operator==(const PuiseuxElement& rhs) const {
  require_same_context(ctx_, rhs.ctx_, "comparing Puiseux elements");
  if (terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].exponent != rhs.terms_[i].exponent) return false;
    if (!(terms_[i].coeff == rhs.terms_[i].coeff)) return false;
  }
  return true;
}

std::string PuiseuxElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    const std::string c = t.coeff.to_string();
    if (t.exponent == 0) {
      out += c;
    } else {
      if (t.coeff.is_one())
        out += "t";
      else
        out += "(" + c + ")*t";
      if (t.exponent != 1) out += "^(" + tropline::to_string(t.exponent) + ")";
    }
  }
  return out;
}

PuiseuxFraction::PuiseuxFraction(PuiseuxElement num)
    : num_(std::move(num)),
      den_(PuiseuxElement::from_rational(num_.context(), Rational(1))) {}

PuiseuxFraction::PuiseuxFraction(PuiseuxElement num, PuiseuxElement den)
    : num_(std::move(num)), den_(std::move(den)) {
  require_same_context(num_.context(), den_.context(), "fraction contexts");
  if (den_.is_zero()) throw DivisionByZero("fraction with zero denominator");
}

PuiseuxFraction PuiseuxFraction::zero(const ContextPtr& ctx) {
  return PuiseuxFraction(PuiseuxElement::zero(ctx));
}

PuiseuxFraction PuiseuxFraction::one(const ContextPtr& ctx) {
  return PuiseuxFraction(PuiseuxElement::from_rational(ctx, Rational(1)));
}

PuiseuxFraction PuiseuxFraction::operator-() const {
  return PuiseuxFraction(-num_, den_);
}

PuiseuxFraction PuiseuxFraction::operator+(const PuiseuxFraction& rhs) const {
  return PuiseuxFraction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

PuiseuxFraction PuiseuxFraction::operator-(const PuiseuxFraction& rhs) const {
  return *this + (-rhs);
}

PuiseuxFraction PuiseuxFraction::operator*(const PuiseuxFraction& rhs) const {
  return PuiseuxFraction(num_ * rhs.num_, den_ * rhs.den_);
}

PuiseuxFraction PuiseuxFraction::operator/(const PuiseuxFraction& rhs) const {
  if (rhs.is_zero()) throw DivisionByZero("dividing by zero fraction");
  return PuiseuxFraction(num_ * rhs.den_, den_ * rhs.num_);
}

bool PuiseuxFraction::operator==(const PuiseuxFraction& rhs) const {
  return num_ * rhs.den_ == rhs.num_ * den_;
}

std::string PuiseuxFraction::to_string() const {
  if (den_.terms().size() == 1 && den_.terms()[0].exponent == 0 &&
      den_.terms()[0].coeff.is_one())
    return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

KPolynomial::KPolynomial(int variables, ContextPtr ctx,
                         std::vector<Monomial> monomials)
    : variables_(variables), ctx_(std::move(ctx)) {
  std::map<std::vector<int>, PuiseuxElement> acc;
  for (auto& m : monomials) {
    if (static_cast<int>(m.exponents.size()) != variables_)
      throw DimensionMismatch("monomial exponent tuple length");
    for (int e : m.exponents)
      if (e < 0) throw InvalidArgument("negative exponent in polynomial");
    require_same_context(ctx_, m.coeff.context(), "monomial coefficient context");
    auto it = acc.find(m.exponents);
    if (it == acc.end())
      acc.emplace(m.exponents, m.coeff);
    else
      it->second = it->second + m.coeff;
  }
  for (auto& [e, c] : acc)
    if (!c.is_zero()) monomials_.push_back(Monomial{e, c});
}

int KPolynomial::total_degree() const {
  int d = -1;
  for (const auto& m : monomials_) {
    int s = 0;
    for (int e : m.exponents) s += e;
    d = std::max(d, s);
  }
  return d;
}

KPolynomial KPolynomial::operator+(const KPolynomial& rhs) const {
  if (variables_ != rhs.variables_)
    throw DimensionMismatch("adding polynomials in different variable counts");
  std::vector<Monomial> all = monomials_;
  all.insert(all.end(), rhs.monomials_.begin(), rhs.monomials_.end());
  return KPolynomial(variables_, ctx_, std::move(all));
}

KPolynomial KPolynomial::operator-() const {
  std::vector<Monomial> out;
  out.reserve(monomials_.size());
  for (const auto& m : monomials_) out.push_back(Monomial{m.exponents, -m.coeff});
  return KPolynomial(variables_, ctx_, std::move(out));
}

KPolynomial KPolynomial::operator-(const KPolynomial& rhs) const {
  return *this + (-rhs);
}

KPolynomial KPolynomial::operator*(const KPolynomial& rhs) const {
  if (variables_ != rhs.variables_)
    throw DimensionMismatch("multiplying polynomials in different variable counts");
  std::vector<Monomial> out;
  out.reserve(monomials_.size() * rhs.monomials_.size());
  for (const auto& a : monomials_) {
    for (const auto& b : rhs.monomials_) {
      std::vector<int> e(variables_);
      for (int i = 0; i < variables_; ++i) e[i] = a.exponents[i] + b.exponents[i];
      out.push_back(Monomial{std::move(e), a.coeff * b.coeff});
    }
  }
  return KPolynomial(variables_, ctx_, std::move(out));
}

bool KPolynomial::operator==(const KPolynomial& rhs) const {
  if (variables_ != rhs.variables_) return false;
  if (monomials_.size() != rhs.monomials_.size()) return false;
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    if (monomials_[i].exponents != rhs.monomials_[i].exponents) return false;
    if (monomials_[i].coeff != rhs.monomials_[i].coeff) return false;
  }
  return true;
}

std::string KPolynomial::to_string() const {
  if (monomials_.empty()) return "0";
  std::string out;
  for (const auto& m : monomials_) {
    if (!out.empty()) out += " + ";
    out += "(" + m.coeff.to_string() + ")";
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i] == 0) continue;
      out += "*z" + std::to_string(i + 1);
      if (m.exponents[i] > 1) out += "^" + std::to_string(m.exponents[i]);
    }
  }
  return out;
}

TropicalValue valuation(const PuiseuxElement& f) {
  if (f.is_zero()) return TropicalValue::minus_infinity();
  return TropicalValue(-f.terms().front().exponent);
}

TropicalValue valuation(const PuiseuxFraction& f) {
  if (f.is_zero()) return TropicalValue::minus_infinity();
  return TropicalValue(-f.num().terms().front().exponent +
                       f.den().terms().front().exponent);
}

PuiseuxElement multiply(const PuiseuxElement& f, const PuiseuxElement& g) {
  return f * g;
}

std::array<PuiseuxFraction, 2> solve2x2(
    const std::array<std::array<PuiseuxElement, 2>, 2>& A,
    const std::array<PuiseuxElement, 2>& b) {
  const PuiseuxElement det = A[0][0] * A[1][1] - A[0][1] * A[1][0];
  if (det.is_zero()) throw SingularSystem("2x2 system has zero determinant");
  PuiseuxElement nx = b[0] * A[1][1] - b[1] * A[0][1];
  PuiseuxElement ny = A[0][0] * b[1] - A[1][0] * b[0];
  return {PuiseuxFraction(std::move(nx), det),
          PuiseuxFraction(std::move(ny), det)};
}

PuiseuxFraction substitute_poly(const KPolynomial& F, const KPoint& p) {
  if (static_cast<int>(p.size()) != F.variables())
    throw DimensionMismatch("point dimension does not match polynomial");
  for (const auto& c : p)
    require_same_context(F.context(), c.context(), "point coordinate context");
  PuiseuxFraction acc = PuiseuxFraction::zero(F.context());
  for (const auto& m : F.monomials()) {
    PuiseuxFraction term(m.coeff);
    for (int i = 0; i < F.variables(); ++i)
      for (int e = 0; e < m.exponents[i]; ++e) term = term * p[i];
    acc = acc + term;
  }
  return acc;
}

KPolynomial compose_y(const KPolynomial& f, const KPolynomial& phi) {
  if (f.variables() != 2)
    throw DimensionMismatch("compose_y expects a polynomial in x,y");
  if (phi.variables() != 1)
    throw DimensionMismatch("compose_y expects a univariate substitution");
  require_same_context(f.context(), phi.context(), "substitution context");
  KPolynomial acc(1, f.context());
  for (const auto& m : f.monomials()) {
    KPolynomial term(1, f.context(),
                     {KPolynomial::Monomial{{m.exponents[0]}, m.coeff}});
    for (int e = 0; e < m.exponents[1]; ++e) term = term * phi;
    acc = acc + term;
  }
  return acc;
}

}  // namespace tropline
