#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gwb/graded/resolution.hpp"
#include "gwb/localcoh/koszul.hpp"

namespace gwb {

/// R = S/(f) for a polynomial ring S and a homogeneous nonzerodivisor f.
template <ExactField F>
class Hypersurface {
 public:
  Hypersurface(std::shared_ptr<const PolyRing<F>> poly, Poly<F> f) : poly_(std::move(poly)), f_(std::move(f)) {
    if (f_.is_zero()) throw InputError("the hypersurface equation must be nonzero");
    auto c = f_.homogeneous_codegree();
    if (!c) throw InputError("the hypersurface equation " + f_.to_string() + " is not homogeneous");
    if (*c <= 0) throw InputError("the hypersurface equation must have positive codegree");
    d_ = *c;
    S_ = std::make_shared<const PolynomialModule<F>>(poly_);
    KoszulComplex<F> K(S_, {f_});
    for (long n = 0; n <= 2 * d_; ++n)
      if (K.homology(1, n) != 0) throw DomainError(f_.to_string() + " is a zero divisor in the base ring");
    R_ = std::make_shared<const QuotientRing<F>>(poly_, std::vector<Poly<F>>{f_});
  }

  const PolyRing<F>& poly() const { return *poly_; }
  const std::shared_ptr<const PolyRing<F>>& poly_ptr() const { return poly_; }
  const std::shared_ptr<const PolynomialModule<F>>& base() const { return S_; }
  const std::shared_ptr<const QuotientRing<F>>& quotient() const { return R_; }
  const Poly<F>& equation() const { return f_; }
  long degree() const { return d_; }

 private:
  std::shared_ptr<const PolyRing<F>> poly_;
  Poly<F> f_;
  long d_ = 0;
  std::shared_ptr<const PolynomialModule<F>> S_;
  std::shared_ptr<const QuotientRing<F>> R_;
};

namespace detail {

/// Entries of a vector of a free S-module at codegree n, one polynomial per
/// generator.
template <ExactField F>
std::vector<Poly<F>> to_polys(const FreeModule<F>& M, const RingModule<F>& S, long n, const SparseVec<F>& v) {
  std::vector<Poly<F>> out(M.rank(), Poly<F>(S.ring_ptr()));
  for (const auto& e : v) {
    auto [l, idx] = M.locate(n, e.index);
    out[l] = out[l] + Poly<F>::monomial(S.ring_ptr(), S.basis_monomial(n - M.shifts()[l], idx), e.value);
  }
  return out;
}

}  // namespace detail

/// A finite S-resolution F of M with a system of higher homotopies
/// sigma_k: F_i -> F_(i+2k-1) raising codegree by k d, satisfying
/// sum_(a+b=k) sigma_a sigma_b = f for k = 1 and 0 for k >= 2 (sigma_0 the
/// differential). These give the eventually 2-periodic resolution of M over
/// R with G_m = sum_k Sigma^(dk) F_(m-2k) tensor R.
template <ExactField F>
class SplicedResolution {
 public:
  SplicedResolution(const Hypersurface<F>& h, ModulePtr<F> module, std::size_t h_max, long codegree_max = 0)
      : h_(h), module_(std::move(module)), h_max_(h_max) {
    if (!(module_->ring() == h.poly())) throw InputError("module and hypersurface have different variables");
    const std::size_t nv = h.poly().nvars();
    if (codegree_max <= 0) codegree_max = default_bound();
    s_res_ = std::make_shared<const MinimalResolution<F>>(h.base(), module_, ResolutionOptions{codegree_max, nv + 1, 0});
    if (s_res_->first_clipped_stage() || s_res_->betti(nv + 1) != 0 || !s_res_->is_exact())
      throw DomainError("could not certify a finite resolution over the base ring below codegree " + std::to_string(codegree_max));
    length_ = 0;
    for (std::size_t i = 0; i <= nv; ++i)
      if (s_res_->betti(i)) length_ = i;
    window_ = codegree_max;
    build_homotopies();
    build_complex();
  }

  /// The resolution over S.
  const MinimalResolution<F>& base_resolution() const { return *s_res_; }
  /// Projective dimension over S.
  std::size_t base_length() const { return length_; }
  long window() const { return window_; }

  std::size_t stages() const { return G_.size(); }
  const FreeModule<F>& free(std::size_t m) const { return *G_[m]; }
  /// d_m: G_m -> G_(m-1); d_0: G_0 -> M.
  const FreeMap<F>& differential(std::size_t m) const { return *D_[m]; }
  std::vector<std::size_t> betti() const {
    std::vector<std::size_t> b;
    for (const auto& g : G_) b.push_back(g->rank());
    return b;
  }

  /// sigma_k on the l-th generator of F_i, as a vector of F_(i+2k-1).
  const SparseVec<F>& homotopy(std::size_t k, std::size_t i, std::size_t l) const { return sigma_[k][i][l]; }

  /// sum_(a+b=k) sigma_a sigma_b = f delta_(k,1) on every generator.
  bool homotopies_hold() const {
    for (std::size_t k = 1; k < sigma_.size(); ++k)
      for (std::size_t i = 0; i <= length_; ++i)
        for (std::size_t l = 0; l < s_res_->betti(i); ++l)
          if (!defect(k, i, l).empty() || !solved_[k][i][l]) return false;
    return true;
  }

  bool is_complex() const {
    const auto& f = field();
    for (std::size_t m = 1; m < D_.size(); ++m)
      for (long n = G_[m]->lowest_codegree(); n <= window_; ++n)
        if (G_[m]->dim(n) && !is_zero_matrix(compose(f, D_[m - 1]->matrix(n), D_[m]->matrix(n)))) return false;
    return true;
  }

  /// Exactness at G_m for m < stages() - 1 and onto M, codegree by codegree.
  bool is_exact() const {
    const auto& f = field();
    for (long n = module_->lowest_codegree(); n <= window_; ++n) {
      if (rank(f, D_[0]->matrix(n)) != module_->dim(n)) return false;
      for (std::size_t m = 0; m + 1 < D_.size(); ++m)
        if (rank(f, D_[m]->matrix(n)) + rank(f, D_[m + 1]->matrix(n)) != G_[m]->dim(n)) return false;
    }
    return true;
  }

  /// No unit entries in the differentials.
  bool is_minimal() const {
    for (std::size_t m = 1; m < D_.size(); ++m) {
      const auto& src = *G_[m];
      const auto& dst = *G_[m - 1];
      for (std::size_t l = 0; l < src.rank(); ++l) {
        const long c = src.shifts()[l];
        for (std::size_t k = 0; k < dst.rank(); ++k) {
          if (dst.shifts()[k] != c) continue;
          const auto at = static_cast<std::uint32_t>(dst.offset(c, k));
          for (const auto& e : D_[m]->images()[l])
            if (e.index == at) return false;
        }
      }
    }
    return true;
  }

 private:
  const F& field() const { return h_.poly().field(); }

  long default_bound() const {
    long top = module_->lowest_codegree();
    if (auto p = dynamic_cast<const PresentedModule<F>*>(module_.get())) {
      for (long c : p->free().shifts()) top = std::max(top, c);
      for (long c : p->relation_codegrees()) top = std::max(top, c);
    }
    long vars = 0;
    for (const auto& v : h_.poly().vars()) vars += v.codegree;
    return top + vars + static_cast<long>(h_max_ / 2 + 2) * h_.degree() + 4;
  }

  /// sigma_k on F_i^n -> F_(i+2k-1)^(n+kd), as a map.
  const FreeMap<F>& sigma_map(std::size_t k, std::size_t i) const { return *maps_[k][i]; }

  SparseVec<F> apply_sigma(std::size_t k, std::size_t i, long n, const SparseVec<F>& v) const {
    if (v.empty()) return {};
    if (k == 0) {
      if (i == 0) return {};
      return s_res_->differential(i)(n, v);
    }
    if (i + 2 * k - 1 > length_) return {};
    return sigma_map(k, i)(n, v);
  }

  /// sum_(a+b=k) sigma_a sigma_b (e) - f delta_(k,1) e for the current sigmas;
  /// without_top drops sigma_0 sigma_k, which is not known yet while solving.
  SparseVec<F> defect(std::size_t k, std::size_t i, std::size_t l, bool without_top = false) const {
    const auto& f = field();
    const auto& Fi = s_res_->free(i);
    const long c = Fi.shifts()[l];
    const SparseVec<F> e = Fi.generator(l);
    SparseVec<F> acc;
    for (std::size_t b = 0; b <= k; ++b) {
      if (b == k && without_top) continue;
      if (b == 0 && i == 0) continue;
      const std::size_t mid = b == 0 ? i - 1 : i + 2 * b - 1;
      if (mid > length_) continue;
      auto w = apply_sigma(b, i, c, e);
      w = apply_sigma(k - b, mid, c + static_cast<long>(b) * h_.degree(), w);
      acc = axpy(f, acc, f.one(), w);
    }
    if (k == 1) acc = axpy(f, acc, f.neg(f.one()), Fi.combination(c + h_.degree(), scaled_generator(Fi, l)));
    return acc;
  }

  std::vector<Poly<F>> scaled_generator(const FreeModule<F>& M, std::size_t l) const {
    std::vector<Poly<F>> v(M.rank(), Poly<F>(h_.poly_ptr()));
    v[l] = h_.equation();
    return v;
  }

  void build_homotopies() {
    const auto& f = field();
    const long d = h_.degree();
    const std::size_t kmax = (length_ + 1) / 2;
    sigma_.assign(kmax + 1, {});
    solved_.assign(kmax + 1, {});
    maps_.assign(kmax + 1, {});
    for (std::size_t k = 1; k <= kmax; ++k) {
      sigma_[k].assign(length_ + 1, {});
      solved_[k].assign(length_ + 1, {});
      maps_[k].assign(length_ + 1, nullptr);
      for (std::size_t i = 0; i <= length_; ++i) {
        const auto& Fi = s_res_->free(i);
        const std::size_t t = i + 2 * k - 1;
        sigma_[k][i].assign(Fi.rank(), {});
        solved_[k][i].assign(Fi.rank(), true);
        for (std::size_t l = 0; l < Fi.rank(); ++l) {
          // with sigma_k(e) = 0 the defect is what sigma_0 sigma_k(e) must cancel
          auto rhs = defect(k, i, l, true);
          if (rhs.empty()) continue;
          if (t > length_) {
            solved_[k][i][l] = false;
            continue;
          }
          const long n = Fi.shifts()[l] + static_cast<long>(k) * d;
          auto x = solve(f, s_res_->differential(t).matrix(n), scaled(f, rhs, f.neg(f.one())));
          if (!x) {
            solved_[k][i][l] = false;
            continue;
          }
          sigma_[k][i][l] = std::move(*x);
        }
        if (t <= length_) {
          const auto& T = s_res_->free(t);
          std::vector<long> sh = T.shifts();
          for (auto& s : sh) s -= static_cast<long>(k) * d;
          auto target = std::make_shared<const FreeModule<F>>(h_.base(), std::move(sh));
          maps_[k][i] = std::make_shared<const FreeMap<F>>(s_res_->free_ptr(i), target, sigma_[k][i]);
        }
      }
    }
    if (!homotopies_hold()) throw Error("failed to construct a system of higher homotopies");
  }

  void build_complex() {
    const auto& f = field();
    const long d = h_.degree();
    const auto& R = *h_.quotient();
    // block layout of G_m: (k, i = m - 2k) for k ascending
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> blocks(h_max_ + 1);
    std::vector<std::vector<std::size_t>> block_start(h_max_ + 1);
    for (std::size_t m = 0; m <= h_max_; ++m) {
      std::vector<long> sh;
      for (std::size_t k = 0; 2 * k <= m; ++k) {
        const std::size_t i = m - 2 * k;
        block_start[m].push_back(sh.size());
        blocks[m].push_back({k, i});
        if (i > length_) continue;
        for (long c : s_res_->generator_codegrees(i)) sh.push_back(c + static_cast<long>(k) * d);
      }
      G_.push_back(std::make_shared<const FreeModule<F>>(h_.quotient(), std::move(sh)));
    }
    D_.push_back(std::make_shared<const FreeMap<F>>(G_[0], module_, s_res_->differential(0).images()));
    for (std::size_t m = 1; m <= h_max_; ++m) {
      std::vector<SparseVec<F>> images;
      const auto& dst = *G_[m - 1];
      for (std::size_t bi = 0; bi < blocks[m].size(); ++bi) {
        const auto [k, i] = blocks[m][bi];
        if (i > length_) continue;
        const auto& Fi = s_res_->free(i);
        for (std::size_t l = 0; l < Fi.rank(); ++l) {
          const long c = Fi.shifts()[l];
          const long N = c + static_cast<long>(k) * d;
          SparseVec<F> img;
          for (std::size_t j = 0; j <= k; ++j) {
            if (j == 0 && i == 0) continue;
            const std::size_t t = i + 2 * j - 1;
            if (t > length_) continue;
            auto w = apply_sigma(j, i, c, Fi.generator(l));
            if (w.empty()) continue;
            const auto& Ft = s_res_->free(t);
            const std::size_t g0 = block_start[m - 1][k - j];
            const long n_t = c + static_cast<long>(j) * d;
            // split w by generator of F_t and reduce each block mod f
            std::size_t pos = 0;
            for (std::size_t g = 0; g < Ft.rank(); ++g) {
              const long a = n_t - Ft.shifts()[g];
              const std::size_t b = h_.base()->dim(a);
              SparseVec<F> part;
              for (const auto& e : w)
                if (e.index >= pos && e.index < pos + b) part.push_back({static_cast<std::uint32_t>(e.index - pos), e.value});
              pos += b;
              if (part.empty()) continue;
              auto r = R.reduce(a, part);
              const auto off = static_cast<std::uint32_t>(dst.offset(N, g0 + g));
              for (const auto& e : r) img.push_back({e.index + off, e.value});
            }
          }
          normalize(f, img);
          images.push_back(std::move(img));
        }
      }
      D_.push_back(std::make_shared<const FreeMap<F>>(G_[m], G_[m - 1], std::move(images)));
    }
  }

  Hypersurface<F> h_;
  ModulePtr<F> module_;
  std::size_t h_max_;
  long window_ = 0;
  std::size_t length_ = 0;
  std::shared_ptr<const MinimalResolution<F>> s_res_;
  std::vector<std::vector<std::vector<SparseVec<F>>>> sigma_;
  std::vector<std::vector<std::vector<bool>>> solved_;
  std::vector<std::vector<std::shared_ptr<const FreeMap<F>>>> maps_;
  std::vector<std::shared_ptr<const FreeModule<F>>> G_;
  std::vector<std::shared_ptr<const FreeMap<F>>> D_;
};

}  // namespace gwb
