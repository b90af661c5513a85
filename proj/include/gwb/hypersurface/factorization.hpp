#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gwb/hypersurface/hypersurface.hpp"

namespace gwb {

/// Row-major matrix of polynomials.
template <ExactField F>
using PolyMatrix = std::vector<std::vector<Poly<F>>>;

template <ExactField F>
PolyMatrix<F> multiply(const PolyMatrix<F>& a, const PolyMatrix<F>& b, const std::shared_ptr<const PolyRing<F>>& ring) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  PolyMatrix<F> out(n, std::vector<Poly<F>>(m, Poly<F>(ring)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t t = 0; t < k; ++t) out[i][j] = out[i][j] + a[i][t] * b[t][j];
  return out;
}

template <ExactField F>
bool is_scalar_matrix(const PolyMatrix<F>& m, const Poly<F>& f) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (!((m[i][j] - (i == j ? f : Poly<F>(f.ring_ptr()))).is_zero())) return false;
  return true;
}

/// A: F_1 -> F_0 and B: F_0 -> F_1 over S with AB = BA = f.
template <ExactField F>
struct MatrixFactorization {
  PolyMatrix<F> A;
  PolyMatrix<F> B;
  std::vector<long> f0_codegrees;
  std::vector<long> f1_codegrees;
  Poly<F> f;

  bool verify() const {
    const auto& ring = f.ring_ptr();
    return is_scalar_matrix(multiply(A, B, ring), f) && is_scalar_matrix(multiply(B, A, ring), f);
  }
};

/// Solves A B = f I column by column, given A by its columns and the
/// generator codegrees of F_0.
template <ExactField F>
MatrixFactorization<F> complete_factorization(const Hypersurface<F>& h, std::vector<long> gens,
                                              const std::vector<std::vector<Poly<F>>>& columns) {
  if (columns.size() != gens.size())
    throw DomainError("a matrix factorization needs a square presentation; got " + std::to_string(gens.size()) + " generators and " +
                      std::to_string(columns.size()) + " relations");
  const auto& S = h.base();
  const auto& field = h.poly().field();
  const long d = h.degree();
  MatrixFactorization<F> mf;
  mf.f = h.equation();
  mf.f0_codegrees = gens;
  for (const auto& col : columns) {
    if (col.size() != gens.size()) throw InputError("relation column has the wrong number of entries");
    std::optional<long> c;
    for (std::size_t k = 0; k < col.size(); ++k) {
      if (col[k].is_zero()) continue;
      auto e = col[k].homogeneous_codegree();
      if (!e) throw InputError("entry " + col[k].to_string() + " is not homogeneous");
      if (c && *c != *e + gens[k]) throw InputError("relation column is not homogeneous");
      c = *e + gens[k];
    }
    if (!c) throw DomainError("zero relation column in a matrix factorization");
    mf.f1_codegrees.push_back(*c);
  }
  auto F0 = std::make_shared<const FreeModule<F>>(S, gens);
  auto F1 = std::make_shared<const FreeModule<F>>(S, mf.f1_codegrees);
  std::vector<SparseVec<F>> images;
  for (std::size_t l = 0; l < columns.size(); ++l) images.push_back(F0->combination(mf.f1_codegrees[l], columns[l]));
  FreeMap<F> Amap(F1, F0, std::move(images));
  const std::size_t r = gens.size();
  mf.A.assign(r, std::vector<Poly<F>>(r, Poly<F>(h.poly_ptr())));
  mf.B.assign(r, std::vector<Poly<F>>(r, Poly<F>(h.poly_ptr())));
  for (std::size_t l = 0; l < r; ++l)
    for (std::size_t k = 0; k < r; ++k) mf.A[k][l] = columns[l][k];
  for (std::size_t k = 0; k < r; ++k) {
    std::vector<Poly<F>> fk(r, Poly<F>(h.poly_ptr()));
    fk[k] = h.equation();
    const long n = gens[k] + d;
    auto x = solve(field, Amap.matrix(n), F0->combination(n, fk));
    if (!x) throw DomainError(h.equation().to_string() + " does not annihilate the cokernel of the presentation");
    auto col = detail::to_polys(*F1, *S, n, *x);
    for (std::size_t l = 0; l < r; ++l) mf.B[l][k] = col[l];
  }
  if (!mf.verify()) throw DomainError("the presentation is not injective; A B = f I has no two-sided solution");
  return mf;
}

/// The matrix factorization of an R-module of projective dimension 1 over S.
/// A minimal presentation is used as given; otherwise A is read off the
/// minimal S-resolution.
template <ExactField F>
MatrixFactorization<F> matrix_factorization(const Hypersurface<F>& h, ModulePtr<F> M, long codegree_max = 0) {
  if (!(M->ring() == h.poly())) throw InputError("module and hypersurface have different variables");
  const std::size_t nv = h.poly().nvars();
  if (codegree_max <= 0) {
    codegree_max = M->lowest_codegree() + 2 * h.degree() + 8;
    for (const auto& v : h.poly().vars()) codegree_max += v.codegree;
    if (auto p = dynamic_cast<const PresentedModule<F>*>(M.get()))
      for (long c : p->relation_codegrees()) codegree_max = std::max(codegree_max, c + 2 * h.degree() + 8);
  }
  MinimalResolution<F> res(h.base(), M, {codegree_max, nv + 1, 0});
  if (res.first_clipped_stage() || res.betti(nv + 1) != 0)
    throw DomainError("could not certify a finite resolution over the base ring below codegree " + std::to_string(codegree_max));
  std::size_t pd = 0;
  for (std::size_t i = 0; i <= nv; ++i)
    if (res.betti(i)) pd = i;
  if (pd != 1)
    throw DomainError("the module has projective dimension " + std::to_string(pd) +
                      " over the base ring; pass a syzygy of projective dimension 1 instead");
  if (auto p = dynamic_cast<const PresentedModule<F>*>(M.get())) {
    std::vector<std::vector<Poly<F>>> cols;
    for (const auto& c : p->relations()) {
      bool zero = true;
      for (const auto& e : c) zero = zero && e.is_zero();
      if (!zero) cols.push_back(c);
    }
    if (p->free().rank() == res.betti(0) && cols.size() == res.betti(1)) {
      try {
        return complete_factorization(h, p->free().shifts(), cols);
      } catch (const DomainError&) {
        // fall back to the resolution
      }
    }
  }
  const auto& F0 = res.free(0);
  const auto& F1 = res.free(1);
  std::vector<std::vector<Poly<F>>> cols;
  for (std::size_t l = 0; l < F1.rank(); ++l)
    cols.push_back(detail::to_polys(F0, *h.base(), F1.shifts()[l], res.differential(1).images()[l]));
  return complete_factorization(h, F0.shifts(), cols);
}

/// Gulliksen operator bookkeeping and period-2 detection from minimal Betti
/// numbers over R.
struct PeriodicityReport {
  long operator_codegree = 0;
  std::vector<std::size_t> betti;
  std::optional<std::size_t> onset;
  std::size_t period = 2;
  /// b[i] - b[i-2] for i >= 2.
  std::vector<long> differences;
  Verdict periodic = Verdict::inconclusive;
};

inline PeriodicityReport periodicity_from_betti(long operator_codegree, std::vector<std::size_t> b) {
  PeriodicityReport rep;
  rep.operator_codegree = operator_codegree;
  rep.betti = std::move(b);
  const auto& B = rep.betti;
  for (std::size_t i = 2; i < B.size(); ++i) rep.differences.push_back(static_cast<long>(B[i]) - static_cast<long>(B[i - 2]));
  if (B.size() < 4) return rep;
  std::size_t i0 = B.size() - 2;
  while (i0 > 0 && B[i0 - 1 + 2] == B[i0 - 1]) --i0;
  // need both parities checked past the onset
  if (i0 + 4 <= B.size()) {
    rep.onset = i0;
    rep.periodic = Verdict::yes;
  }
  return rep;
}

template <ExactField F>
PeriodicityReport gulliksen_periodicity_check(const Hypersurface<F>& h, ModulePtr<F> M, std::size_t h_max, long codegree_max = 0) {
  if (codegree_max <= 0) {
    long maxv = 1;
    for (const auto& v : h.poly().vars()) maxv = std::max(maxv, v.codegree);
    long top = M->lowest_codegree();
    if (auto p = dynamic_cast<const PresentedModule<F>*>(M.get()))
      for (long c : p->relation_codegrees()) top = std::max(top, c);
    codegree_max = top + static_cast<long>(h_max + 1) * (h.degree() + 2) / 2 + 2 * maxv + h.degree() + 4;
  }
  MinimalResolution<F> res(h.quotient(), M, {codegree_max, h_max, 0});
  std::size_t reliable = res.length();
  if (auto c = res.first_clipped_stage()) reliable = *c;
  auto b = res.betti_totals();
  b.resize(reliable);
  return periodicity_from_betti(h.degree() + 2, std::move(b));
}

}  // namespace gwb
