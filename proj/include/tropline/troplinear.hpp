#pragma once

#include <cstddef>
#include <vector>

#include "tropline/puiseux.hpp"
#include "tropline/tropical.hpp"

namespace tropline {

// Affine-linear form over K: coefficients of z_1..z_n followed by the
// constant term.
struct LinearForm {
  std::vector<PuiseuxFraction> coeffs;  // size n + 1

  int vars() const { return static_cast<int>(coeffs.size()) - 1; }
  const ContextPtr& context() const { return coeffs.front().context(); }
  PuiseuxFraction evaluate(const KPoint& p) const;
  bool operator==(const LinearForm& rhs) const { return coeffs == rhs.coeffs; }

  // z_k (0-based) in n variables
  static LinearForm coordinate(int n, int k, const ContextPtr& ctx);
};

// N-tuple of affine-linear forms, the morphism x -> (f_1(x),...,f_N(x)).
class LinearEmbedding {
 public:
  LinearEmbedding(int source_dim, std::vector<LinearForm> forms);

  static LinearEmbedding identity(int n, const ContextPtr& ctx);

  int source_dim() const { return n_; }
  int target_dim() const { return static_cast<int>(forms_.size()); }
  const std::vector<LinearForm>& forms() const { return forms_; }

  // Exact rank of the linear parts over K; an embedding of A^n needs rank n.
  int linear_rank() const;
  bool is_embedding() const { return linear_rank() == n_; }

 private:
  int n_;
  std::vector<LinearForm> forms_;
};

// Valuations of the 2x2 minors of a rank-2 matrix of row span K^2 -> K^N.
// Satisfies the tropical four-point relation on every 4-subset.
class TropPluckerVector {
 public:
  TropPluckerVector(int N, std::vector<TropicalValue> upper);  // k<l, lex order

  int dim() const { return n_; }
  const TropicalValue& at(int k, int l) const;  // 0-based, k != l

 private:
  int n_;
  std::vector<TropicalValue> p_;  // index (k,l), k < l
};

// f_i(p) for each form; ContextMismatch/DimensionMismatch on bad input.
KPoint apply_embedding(const LinearEmbedding& i, const KPoint& p);

// Concatenation (i_N x i_M); both factors must share the source dimension.
LinearEmbedding product_embedding(const LinearEmbedding& i,
                                  const LinearEmbedding& j);

// Coordinate restriction of a tropical point (0-based indices).
TropicalPoint trop_projection(const TropicalPoint& q,
                              const std::vector<std::size_t>& S);

// Valuations of all 2x2 minors; RankDeficient when every minor vanishes.
TropPluckerVector plucker_valuations(
    const std::vector<std::vector<PuiseuxElement>>& M);  // 2 rows, N columns

// Circuit membership test for the tropicalized line: every 3-subset
// {i,j,k} must attain max(p_jk + x_i, p_ik + x_j, p_ij + x_k) at least twice.
bool line_membership(const TropPluckerVector& P, const TropicalPoint& x);

// Four-point relation on every 4-subset (used by the constructor and by
// property tests).
bool four_point_relation_holds(int N, const std::vector<TropicalValue>& upper);

}  // namespace tropline
