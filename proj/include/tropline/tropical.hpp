#pragma once

#include <string>
#include <vector>

#include "tropline/rational.hpp"

namespace tropline {

// T = Q ∪ {-inf} with max as addition and + as multiplication. -inf is the
// additive neutral element and multiplicatively absorbing.
class TropicalValue {
 public:
  TropicalValue() : finite_(false) {}  // -inf
  TropicalValue(Rational v) : finite_(true), value_(std::move(v)) {}
  TropicalValue(int v) : TropicalValue(Rational(v)) {}

  static TropicalValue minus_infinity() { return TropicalValue(); }

  bool is_minus_infinity() const { return !finite_; }
  bool is_finite() const { return finite_; }
  // Only valid on finite values.
  const Rational& finite_value() const {
    if (!finite_) throw InvalidArgument("finite_value() of -inf");
    return value_;
  }

  friend bool operator==(const TropicalValue& a, const TropicalValue& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const TropicalValue& a, const TropicalValue& b) {
    return !(a == b);
  }
  friend bool operator<(const TropicalValue& a, const TropicalValue& b) {
    if (!a.finite_) return b.finite_;
    if (!b.finite_) return false;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const TropicalValue& a, const TropicalValue& b) {
    return a < b || a == b;
  }

  std::string to_string() const {
    return finite_ ? tropline::to_string(value_) : std::string("-inf");
  }

 private:
  bool finite_;
  Rational value_;
};

// max(a, b)
inline TropicalValue tadd(const TropicalValue& a, const TropicalValue& b) {
  return a < b ? b : a;
}

// a + b with -inf absorbing
inline TropicalValue tmul(const TropicalValue& a, const TropicalValue& b) {
  if (a.is_minus_infinity() || b.is_minus_infinity())
    return TropicalValue::minus_infinity();
  return TropicalValue(a.finite_value() + b.finite_value());
}

using TropicalPoint = std::vector<TropicalValue>;

inline bool tropical_points_equal(const TropicalPoint& a, const TropicalPoint& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

// "-inf" or "p/q"
TropicalValue parse_tropical_value(const std::string& text);

}  // namespace tropline
