#include "tropline/rational.hpp"

#include <cctype>

namespace tropline {

std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      if (!valid_integer_token(text))
        throw ParseError("malformed rational '" + text + "'");
      return Rational(Int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
      throw ParseError("malformed rational '" + text + "'");
    Int d(den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    Int n(num);
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return Rational(n, d);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("malformed rational '" + text + "'");
  }
}

}  // namespace tropline
