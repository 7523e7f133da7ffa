#include "tropline/troplinear.hpp"

#include <algorithm>

namespace tropline {

namespace {

int pair_index(int N, int k, int l) {
  // lex order over k < l: (0,1), (0,2), ..., (0,N-1), (1,2), ...
  return k * (2 * N - k - 1) / 2 + (l - k - 1);
}

}  // namespace

PuiseuxFraction LinearForm::evaluate(const KPoint& p) const {
  if (static_cast<int>(p.size()) != vars())
    throw DimensionMismatch("form arity does not match point dimension");
  PuiseuxFraction acc = coeffs.back();  // constant term
  for (std::size_t i = 0; i < p.size(); ++i) acc = acc + coeffs[i] * p[i];
  return acc;
}

LinearForm LinearForm::coordinate(int n, int k, const ContextPtr& ctx) {
  if (k < 0 || k >= n) throw IndexOutOfRange("coordinate index");
  std::vector<PuiseuxFraction> c(n + 1, PuiseuxFraction::zero(ctx));
  c[k] = PuiseuxFraction::one(ctx);
  return LinearForm{std::move(c)};
}

LinearEmbedding::LinearEmbedding(int source_dim, std::vector<LinearForm> forms)
    : n_(source_dim), forms_(std::move(forms)) {
  for (const auto& f : forms_)
    if (f.vars() != n_)
      throw DimensionMismatch("form arity does not match source dimension");
}

LinearEmbedding LinearEmbedding::identity(int n, const ContextPtr& ctx) {
  std::vector<LinearForm> forms;
  forms.reserve(n);
  for (int k = 0; k < n; ++k) forms.push_back(LinearForm::coordinate(n, k, ctx));
  return LinearEmbedding(n, std::move(forms));
}

int LinearEmbedding::linear_rank() const {
  // Gaussian elimination over K on the N x n matrix of linear parts.
  std::vector<std::vector<PuiseuxFraction>> rows;
  rows.reserve(forms_.size());
  for (const auto& f : forms_)
    rows.emplace_back(f.coeffs.begin(), f.coeffs.end() - 1);
  int rank = 0;
  for (int col = 0; col < n_ && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (!rows[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col].is_zero()) continue;
      const PuiseuxFraction factor = rows[r][col] / rows[rank][col];
      for (int c = col; c < n_; ++c)
        rows[r][c] = rows[r][c] - factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

TropPluckerVector::TropPluckerVector(int N, std::vector<TropicalValue> upper)
    : n_(N), p_(std::move(upper)) {
  if (n_ < 2) throw InvalidArgument("Pluecker vector needs N >= 2");
  if (static_cast<int>(p_.size()) != n_ * (n_ - 1) / 2)
    throw DimensionMismatch("Pluecker coordinate count");
  bool any_finite = false;
  for (const auto& v : p_) any_finite = any_finite || v.is_finite();
  if (!any_finite)
    throw RankDeficient("Pluecker vector identically -inf");
  if (!four_point_relation_holds(n_, p_))
    throw InvalidArgument("four-point relation violated");
}

const TropicalValue& TropPluckerVector::at(int k, int l) const {
  if (k > l) std::swap(k, l);
  if (k < 0 || l >= n_ || k == l) throw IndexOutOfRange("Pluecker index");
  return p_[pair_index(n_, k, l)];
}

KPoint apply_embedding(const LinearEmbedding& i, const KPoint& p) {
  if (static_cast<int>(p.size()) != i.source_dim())
    throw DimensionMismatch("point dimension does not match embedding source");
  KPoint out;
  out.reserve(i.forms().size());
  for (const auto& f : i.forms()) out.push_back(f.evaluate(p));
  return out;
}

LinearEmbedding product_embedding(const LinearEmbedding& i,
                                  const LinearEmbedding& j) {
  if (i.source_dim() != j.source_dim())
    throw DimensionMismatch("product of embeddings with different sources");
  std::vector<LinearForm> forms = i.forms();
  forms.insert(forms.end(), j.forms().begin(), j.forms().end());
  return LinearEmbedding(i.source_dim(), std::move(forms));
}

TropicalPoint trop_projection(const TropicalPoint& q,
                              const std::vector<std::size_t>& S) {
  TropicalPoint out;
  out.reserve(S.size());
  for (std::size_t idx : S) {
    if (idx >= q.size()) throw IndexOutOfRange("projection index");
    out.push_back(q[idx]);
  }
  return out;
}

TropPluckerVector plucker_valuations(
    const std::vector<std::vector<PuiseuxElement>>& M) {
  if (M.size() != 2) throw DimensionMismatch("Pluecker input needs 2 rows");
  const int N = static_cast<int>(M[0].size());
  if (static_cast<int>(M[1].size()) != N)
    throw DimensionMismatch("ragged matrix");
  if (N < 2) throw InvalidArgument("Pluecker input needs N >= 2 columns");
  std::vector<TropicalValue> upper;
  upper.reserve(N * (N - 1) / 2);
  bool any_nonzero = false;
  for (int k = 0; k < N; ++k) {
    for (int l = k + 1; l < N; ++l) {
      const PuiseuxElement minor = M[0][k] * M[1][l] - M[0][l] * M[1][k];
      any_nonzero = any_nonzero || !minor.is_zero();
      upper.push_back(valuation(minor));
    }
  }
  if (!any_nonzero) throw RankDeficient("matrix has rank < 2");
  return TropPluckerVector(N, std::move(upper));
}

bool line_membership(const TropPluckerVector& P, const TropicalPoint& x) {
  const int N = P.dim();
  if (static_cast<int>(x.size()) != N)
    throw DimensionMismatch("point dimension does not match Pluecker vector");
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) {
      for (int k = j + 1; k < N; ++k) {
        const TropicalValue terms[3] = {tmul(P.at(j, k), x[i]),
                                        tmul(P.at(i, k), x[j]),
                                        tmul(P.at(i, j), x[k])};
        const TropicalValue m =
            tadd(terms[0], tadd(terms[1], terms[2]));
        int attained = 0;
        for (const auto& t : terms)
          if (t == m) ++attained;
        if (attained < 2) return false;
      }
    }
  }
  return true;
}

bool four_point_relation_holds(int N, const std::vector<TropicalValue>& upper) {
  auto at = [&](int k, int l) -> const TropicalValue& {
    if (k > l) std::swap(k, l);
    return upper[pair_index(N, k, l)];
  };
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) {
      for (int k = j + 1; k < N; ++k) {
        for (int l = k + 1; l < N; ++l) {
          const TropicalValue terms[3] = {tmul(at(i, j), at(k, l)),
                                          tmul(at(i, k), at(j, l)),
                                          tmul(at(i, l), at(j, k))};
          const TropicalValue m = tadd(terms[0], tadd(terms[1], terms[2]));
          int attained = 0;
          for (const auto& t : terms)
            if (t == m) ++attained;
          if (attained < 2) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace tropline
