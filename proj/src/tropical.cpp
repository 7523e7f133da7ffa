#include "tropline/tropical.hpp"

#include "tropline/puiseux.hpp"

namespace tropline {

TropicalValue parse_tropical_value(const std::string& text) {
  if (text == "-inf") return TropicalValue::minus_infinity();
  return TropicalValue(parse_rational(text));
}

TropicalPoint trop_point(const KPoint& p) {
  TropicalPoint out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(valuation(c));
  return out;
}

}  // namespace tropline
