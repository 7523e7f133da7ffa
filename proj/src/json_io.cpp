#include "tropline/json_io.hpp"

namespace tropline::io {

namespace {

void expect(bool cond, const std::string& what) {
  if (!cond) throw ParseError(what);
}

long long to_index(const json& j, const char* what) {
  expect(j.is_number_integer(), std::string(what) + " must be an integer");
  return j.get<long long>();
}

}  // namespace

json encode(const Rational& r) { return to_string(r); }

json encode(const TropicalValue& v) { return v.to_string(); }

json encode(const TropicalPoint& p) {
  json out = json::array();
  for (const auto& v : p) out.push_back(encode(v));
  return out;
}

Rational decode_rational(const json& j) {
  expect(j.is_string(), "rational must be a string like \"3/4\"");
  return parse_rational(j.get<std::string>());
}

TropicalValue decode_tropical(const json& j) {
  expect(j.is_string(), "tropical value must be a string or \"-inf\"");
  return parse_tropical_value(j.get<std::string>());
}

json encode_context(const FieldContext& ctx) {
  json coeffs = json::array();
  for (const auto& c : ctx.minimal_polynomial()) coeffs.push_back(encode(c));
  return json{{"minimal_polynomial", coeffs}};
}

ContextPtr decode_context(const json& j) {
  expect(j.is_object() && j.contains("minimal_polynomial"),
         "context must be {\"minimal_polynomial\": [...]}");
  const json& mp = j.at("minimal_polynomial");
  expect(mp.is_array() && mp.size() >= 2,
         "minimal polynomial needs degree >= 1");
  std::vector<Rational> coeffs;
  for (const auto& c : mp) coeffs.push_back(decode_rational(c));
  if (coeffs.back() != 1)
    throw ParseError("minimal polynomial must be monic");
  return std::make_shared<FieldContext>(std::move(coeffs));
}

json encode(const AlgebraicNumber& a) {
  json coeffs = json::array();
  for (const auto& c : a.coeffs()) coeffs.push_back(encode(c));
  return json{{"coeffs", coeffs}};
}

AlgebraicNumber decode_algebraic(const json& j, const ContextPtr& ctx) {
  if (j.is_string())
    return AlgebraicNumber::from_rational(ctx, decode_rational(j));
  expect(j.is_object() && j.contains("coeffs"),
         "algebraic number must be {\"coeffs\": [...]} or a rational string");
  const json& cs = j.at("coeffs");
  expect(cs.is_array(), "coeffs must be an array");
  std::vector<Rational> coeffs;
  for (const auto& c : cs) coeffs.push_back(decode_rational(c));
  if (static_cast<int>(coeffs.size()) > ctx->degree())
    throw ParseError("more coefficients than the context degree");
  coeffs.resize(ctx->degree(), Rational(0));
  return AlgebraicNumber(ctx, std::move(coeffs));
}

json encode(const PuiseuxElement& e) {
  json out = json::array();
  for (const auto& t : e.terms())
    out.push_back(json{{"q", encode(t.exponent)}, {"c", encode(t.coeff)}});
  return out;
}

PuiseuxElement decode_element(const json& j, const ContextPtr& ctx) {
  expect(j.is_array(), "Puiseux element must be [{\"q\":..., \"c\":...}]");
  std::vector<PuiseuxElement::Term> terms;
  for (const auto& t : j) {
    expect(t.is_object() && t.contains("q") && t.contains("c"),
           "Puiseux term must have \"q\" and \"c\"");
    terms.push_back(
        {decode_rational(t.at("q")), decode_algebraic(t.at("c"), ctx)});
  }
  return PuiseuxElement(ctx, std::move(terms));
}

json encode(const PuiseuxFraction& f) {
  return json{{"num", encode(f.num())}, {"den", encode(f.den())}};
}

PuiseuxFraction decode_fraction(const json& j, const ContextPtr& ctx) {
  if (j.is_array()) return PuiseuxFraction(decode_element(j, ctx));
  expect(j.is_object() && j.contains("num"),
         "fraction must be {\"num\":..., \"den\":...} or a bare element");
  PuiseuxElement num = decode_element(j.at("num"), ctx);
  if (!j.contains("den")) return PuiseuxFraction(std::move(num));
  PuiseuxElement den = decode_element(j.at("den"), ctx);
  if (den.is_zero()) throw ParseError("fraction has zero denominator");
  return PuiseuxFraction(std::move(num), std::move(den));
}

json encode(const KPolynomial& F) {
  json out = json::array();
  for (const auto& m : F.monomials()) {
    json exp = json::array();
    for (int e : m.exponents) exp.push_back(e);
    out.push_back(json{{"exp", exp}, {"coef", encode(m.coeff)}});
  }
  return out;
}

KPolynomial decode_polynomial(const json& j, const ContextPtr& ctx) {
  expect(j.is_array() && !j.empty(),
         "polynomial must be a nonempty [{\"exp\":[...], \"coef\":...}]");
  std::vector<KPolynomial::Monomial> ms;
  int vars = -1;
  for (const auto& m : j) {
    expect(m.is_object() && m.contains("exp") && m.contains("coef"),
           "monomial must have \"exp\" and \"coef\"");
    const json& exp = m.at("exp");
    expect(exp.is_array() && !exp.empty(), "exp must be a nonempty array");
    std::vector<int> e;
    for (const auto& x : exp) {
      const long long v = to_index(x, "exponent");
      expect(v >= 0, "exponents must be nonnegative");
      e.push_back(static_cast<int>(v));
    }
    if (vars < 0) vars = static_cast<int>(e.size());
    expect(static_cast<int>(e.size()) == vars,
           "all exponent tuples must have the same length");
    ms.push_back({std::move(e), decode_element(m.at("coef"), ctx)});
  }
  return KPolynomial(vars, ctx, std::move(ms));
}

json encode(const TropicalPolynomial& F) {
  json out = json::array();
  for (const auto& t : F.support()) {
    out.push_back(json{{"exp", json::array({t.exp[0].convert_to<long long>(),
                                            t.exp[1].convert_to<long long>()})},
                       {"coef", encode(t.coeff)}});
  }
  return out;
}

json encode(const QPoint& p) {
  return json::array({encode(p.x), encode(p.y)});
}

json encode(const PlanarComplex& C) {
  json vertices = json::array();
  for (const auto& v : C.vertices) vertices.push_back(encode(v));
  json edges = json::array();
  for (const auto& e : C.edges) {
    json je;
    switch (e.kind) {
      case PlanarComplex::Edge::Kind::Segment:
        je["kind"] = "segment";
        break;
      case PlanarComplex::Edge::Kind::Ray:
        je["kind"] = "ray";
        break;
      case PlanarComplex::Edge::Kind::Line:
        je["kind"] = "line";
        break;
    }
    je["tail"] = e.tail >= 0 ? json(e.tail) : json(nullptr);
    je["head"] = e.head >= 0 ? json(e.head) : json(nullptr);
    je["base"] = encode(e.base);
    je["dir"] = json::array({e.dir[0].convert_to<long long>(),
                             e.dir[1].convert_to<long long>()});
    if (e.kind == PlanarComplex::Edge::Kind::Segment)
      je["length"] = encode(e.length);
    je["mult"] = e.multiplicity;
    je["dual"] = json::array(
        {json::array({e.dual[0][0].convert_to<long long>(),
                      e.dual[0][1].convert_to<long long>()}),
         json::array({e.dual[1][0].convert_to<long long>(),
                      e.dual[1][1].convert_to<long long>()})});
    edges.push_back(std::move(je));
  }
  return json{{"vertices", vertices}, {"edges", edges}};
}

json encode(const IntersectionReport& rep) {
  json out;
  if (rep.is_finite()) {
    out["kind"] = "finite";
    json pts = json::array();
    for (const auto& [p, m] : rep.points)
      pts.push_back(json{{"point", encode(p)}, {"mult", m}});
    out["points"] = pts;
    out["total_multiplicity"] = rep.total_multiplicity;
  } else {
    out["kind"] = "infinite";
    out["witness"] = json::array(
        {encode(rep.witness->first), encode(rep.witness->second)});
  }
  return out;
}

json encode(const LinearEmbedding& e) {
  json out = json::array();
  for (const auto& f : e.forms()) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs) coeffs.push_back(encode(c));
    out.push_back(std::move(coeffs));
  }
  return out;
}

LinearEmbedding decode_embedding(const json& j, const ContextPtr& ctx) {
  expect(j.is_array() && !j.empty(),
         "embedding must be a nonempty list of coefficient lists");
  std::vector<LinearForm> forms;
  int n = -1;
  for (const auto& f : j) {
    expect(f.is_array() && f.size() >= 2, "form needs n+1 coefficients");
    if (n < 0) n = static_cast<int>(f.size()) - 1;
    expect(static_cast<int>(f.size()) == n + 1,
           "all forms must have the same arity");
    std::vector<PuiseuxFraction> coeffs;
    for (const auto& c : f) coeffs.push_back(decode_fraction(c, ctx));
    forms.push_back(LinearForm{std::move(coeffs)});
  }
  return LinearEmbedding(n, std::move(forms));
}

json encode(const KPoint& p) {
  json out = json::array();
  for (const auto& c : p) out.push_back(encode(c));
  return out;
}

KPoint decode_point(const json& j, const ContextPtr& ctx) {
  expect(j.is_array() && !j.empty(), "point must be a nonempty array");
  KPoint p;
  for (const auto& c : j) p.push_back(decode_fraction(c, ctx));
  return p;
}

json encode(const TransversalityCertificate& cert) {
  json pairs = json::array();
  for (const auto& rec : cert.pairs) {
    pairs.push_back(json{
        {"lines", json::array({rec.line_a + 1, rec.line_b + 1})},
        {"proj", json::array({rec.proj_u + 1, rec.proj_v + 1})},
        {"point", encode(rec.expected)},
        {"multiplicity",
         rec.planar.is_finite() && rec.planar.points.size() == 1
             ? rec.planar.points[0].second
             : 0}});
  }
  json separation = json::array();
  for (const auto& s : cert.separation) separation.push_back(encode(s));
  return json{{"embedding", encode(cert.embedding)},
              {"pairs", pairs},
              {"separation", separation},
              {"seed", cert.seed}};
}

json encode(const certcheck::CheckResult& res) {
  json fails = json::array();
  for (const auto& f : res.failures) fails.push_back(f);
  return json{{"accepted", res.ok}, {"failures", fails}};
}

}  // namespace tropline::io
