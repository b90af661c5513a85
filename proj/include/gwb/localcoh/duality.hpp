#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gwb/graded/resolution.hpp"
#include "gwb/localcoh/cech.hpp"

namespace gwb {

struct DualityOptions {
  long n_min = -20;
  long n_max = 20;
  /// Codegree bound for the resolution over P; 0 chooses one from the window.
  long resolution_codegree_max = 0;
};

/// Local cohomology of a module over a polynomial ring P = k[theta_1..theta_d]
/// by graded local duality: dim H^i(M)^n = dim Ext^(d-i)_P(M, w)^(-n), with
/// w = P generated in codegree delta = sum |theta_j|.
template <ExactField F>
class DualityMethod {
 public:
  DualityMethod(ModulePtr<F> module, DualityOptions opt = {}) : module_(std::move(module)), opt_(opt) {
    const auto& P = module_->ring();
    for (std::size_t v = 0; v < P.nvars(); ++v)
      if (P.is_odd(v)) throw DomainError("duality method needs a commutative polynomial base; " + P.var(v).name + " anticommutes");
    if (P.nvars() == 0) throw DomainError("duality method needs at least one variable");
    delta_ = 0;
    long maxd = 1;
    for (const auto& v : P.vars()) {
      delta_ += v.codegree;
      maxd = std::max(maxd, v.codegree);
    }
    poly_ = std::make_shared<const PolynomialModule<F>>(module_->ring_ptr());
    long N = opt_.resolution_codegree_max;
    if (N <= 0) N = std::max(-opt_.n_min + delta_, module_->lowest_codegree()) + 2 * delta_ + 4 * maxd + 8;
    ResolutionOptions ro{N, P.nvars() + 1, 0};
    res_ = std::make_shared<const MinimalResolution<F>>(poly_, module_, ro);
    complete_ = res_->betti(P.nvars() + 1) == 0 && !res_->first_clipped_stage() && euler_certificate(N);
  }

  const MinimalResolution<F>& resolution() const { return *res_; }
  /// True when the resolution over P is certified complete for the window.
  bool complete() const { return complete_; }
  long dualizing_codegree() const { return delta_; }

  /// dim Ext^j_P(M, w) at codegree m.
  std::size_t ext_dim(std::size_t j, long m) const {
    const auto& f = module_->field();
    const std::size_t dj = hom_dim(j, m);
    if (dj == 0) return 0;
    const std::size_t out = rank(f, hom_map(j, m));
    const std::size_t in = j == 0 ? 0 : rank(f, hom_map(j - 1, m));
    return dj - out - in;
  }

  CohomologyTable table() const {
    const std::size_t d = module_->ring().nvars();
    CohomologyTable T("duality", d + 1, opt_.n_min, opt_.n_max);
    for (std::size_t i = 0; i <= d; ++i)
      for (long n = opt_.n_min; n <= opt_.n_max; ++n)
        T.set(i, n, ext_dim(d - i, -n), complete_ ? CellFlag::exact : CellFlag::clipped);
    return T;
  }

 private:
  /// dim Hom(F_j, w)^m = sum_l dim P^(m + c_l - delta).
  std::size_t hom_dim(std::size_t j, long m) const {
    if (j >= res_->length()) return 0;
    std::size_t d = 0;
    for (long c : res_->generator_codegrees(j)) d += poly_->dim(m + c - delta_);
    return d;
  }

  /// phi -> phi o d_(j+1): Hom(F_j, w)^m -> Hom(F_(j+1), w)^m.
  SparseMatrix<F> hom_map(std::size_t j, long m) const {
    SparseMatrix<F> out(hom_dim(j + 1, m), hom_dim(j, m));
    if (j + 1 >= res_->length() || out.cols == 0) return out;
    const auto& src = res_->free(j);
    const auto& dst = res_->free(j + 1);
    const auto& d = res_->differential(j + 1);
    const auto& f = module_->field();
    // entries p_(l, l') of d_(j+1) as vectors over the monomials of P
    std::vector<std::size_t> row_off(dst.rank() + 1, 0);
    for (std::size_t k = 0; k < dst.rank(); ++k) row_off[k + 1] = row_off[k] + poly_->dim(m + dst.shifts()[k] - delta_);
    std::size_t col = 0;
    for (std::size_t l = 0; l < src.rank(); ++l) {
      const long cl = src.shifts()[l];
      const long a = m + cl - delta_;
      const std::size_t b = poly_->dim(a);
      for (std::size_t mu = 0; mu < b; ++mu, ++col) {
        const Monomial mono = poly_->basis_monomial(a, mu);
        SparseVec<F> acc;
        for (std::size_t k = 0; k < dst.rank(); ++k) {
          const long ck = dst.shifts()[k];
          // coefficient polynomial of e_l in d(e'_k), codegree ck - cl
          const auto& img = d.images()[k];
          const std::size_t lo = src.offset(ck, l), hi = lo + poly_->dim(ck - cl);
          for (const auto& e : img) {
            if (e.index < lo || e.index >= hi) continue;
            const Monomial p = poly_->basis_monomial(ck - cl, e.index - lo);
            int s = poly_->ring().product_sign(p, mono);
            if (s == 0) continue;
            const long idx = poly_->basis_index(poly_->ring().product(p, mono));
            acc.push_back({static_cast<std::uint32_t>(row_off[k] + static_cast<std::size_t>(idx)), s > 0 ? e.value : f.neg(e.value)});
          }
        }
        normalize(f, acc);
        out.columns[col] = std::move(acc);
      }
    }
    return out;
  }

  /// The K-polynomial of the resolution predicts dim M^n past the window.
  bool euler_certificate(long N) const {
    const long extra = N + 2 * delta_ + 8;
    for (long n = module_->lowest_codegree(); n <= extra; ++n) {
      long s = 0;
      for (std::size_t j = 0; j < res_->length(); ++j) {
        long fj = 0;
        for (long c : res_->generator_codegrees(j)) fj += static_cast<long>(poly_->dim(n - c));
        s += j % 2 ? -fj : fj;
      }
      if (s != static_cast<long>(module_->dim(n))) return false;
    }
    return true;
  }

  ModulePtr<F> module_;
  DualityOptions opt_;
  long delta_ = 0;
  std::shared_ptr<const PolynomialModule<F>> poly_;
  std::shared_ptr<const MinimalResolution<F>> res_;
  bool complete_ = false;
};

template <ExactField F>
CohomologyTable local_cohomology_duality(ModulePtr<F> module, const DualityOptions& opt = {}) {
  return DualityMethod<F>(std::move(module), opt).table();
}

}  // namespace gwb
