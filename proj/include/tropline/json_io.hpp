#pragma once

#include <string>

#include "json.hpp"

#include "tropline/certcheck.hpp"
#include "tropline/separate.hpp"
#include "tropline/seminorm.hpp"

namespace tropline::io {

using json = nlohmann::ordered_json;

// Scalars. Rationals travel as "p" / "p/q" strings, tropical values as
// "-inf" or a rational string; nothing is ever a JSON float.
json encode(const Rational& r);
json encode(const TropicalValue& v);
json encode(const TropicalPoint& p);

json encode_context(const FieldContext& ctx);
ContextPtr decode_context(const json& j);

// Algebraic numbers are {"coeffs": [...]} ; a bare rational string is
// accepted on input as shorthand for a constant.
json encode(const AlgebraicNumber& a);
AlgebraicNumber decode_algebraic(const json& j, const ContextPtr& ctx);

// Puiseux elements are [{"q": exponent, "c": coefficient}, ...].
json encode(const PuiseuxElement& e);
PuiseuxElement decode_element(const json& j, const ContextPtr& ctx);

// Fractions are {"num": element, "den": element}; a bare element array is
// accepted as numerator over 1.
json encode(const PuiseuxFraction& f);
PuiseuxFraction decode_fraction(const json& j, const ContextPtr& ctx);

// Polynomials are [{"exp": [i, j, ...], "coef": element}, ...].
json encode(const KPolynomial& F);
KPolynomial decode_polynomial(const json& j, const ContextPtr& ctx);

json encode(const TropicalPolynomial& F);

json encode(const QPoint& p);
json encode(const PlanarComplex& C);
json encode(const IntersectionReport& rep);

// Embeddings are a list of coefficient lists (length n+1 each).
json encode(const LinearEmbedding& e);
LinearEmbedding decode_embedding(const json& j, const ContextPtr& ctx);

json encode(const KPoint& p);
KPoint decode_point(const json& j, const ContextPtr& ctx);

// Certificate format: {"embedding": ..., "pairs": [{"lines": [a,b],
// "proj": [k,l], "point": [tv,tv], "multiplicity": 1}], "separation":
// [[tv,...],...], "seed": n}. Indices are 1-based on the wire.
json encode(const TransversalityCertificate& cert);

json encode(const certcheck::CheckResult& res);

Rational decode_rational(const json& j);
TropicalValue decode_tropical(const json& j);

}  // namespace tropline::io
