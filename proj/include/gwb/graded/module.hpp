#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gwb/error.hpp"
#include "gwb/graded/ring.hpp"
#include "gwb/scalars/linalg.hpp"

namespace gwb {

/// A graded module over a polynomial ring P, known degreewise: M^n is
/// F^dim(n) and each variable acts by a matrix M^n -> M^(n + |x|).
/// M^n = 0 for n < lowest_codegree().
template <ExactField F>
class GradedModule {
 public:
  using V = typename F::value_type;

  explicit GradedModule(std::shared_ptr<const PolyRing<F>> ring) : ring_(std::move(ring)) {}
  virtual ~GradedModule() = default;
  GradedModule(const GradedModule&) = delete;
  GradedModule& operator=(const GradedModule&) = delete;

  const PolyRing<F>& ring() const { return *ring_; }
  const std::shared_ptr<const PolyRing<F>>& ring_ptr() const { return ring_; }
  const F& field() const { return ring_->field(); }

  virtual std::size_t dim(long n) const = 0;
  virtual long lowest_codegree() const = 0;

  /// Action of variable `var` from codegree n.
  const SparseMatrix<F>& act(std::size_t var, long n) const {
    std::lock_guard<std::recursive_mutex> lock(act_mutex_);
    auto key = std::make_pair(var, n);
    auto it = act_cache_.find(key);
    if (it != act_cache_.end()) return it->second;
    SparseMatrix<F> m = dim(n) == 0 ? SparseMatrix<F>(dim(n + ring_->var(var).codegree), 0) : compute_act(var, n);
    return act_cache_.emplace(key, std::move(m)).first->second;
  }

 protected:
  virtual SparseMatrix<F> compute_act(std::size_t var, long n) const = 0;

 private:
  std::shared_ptr<const PolyRing<F>> ring_;
  mutable std::recursive_mutex act_mutex_;
  mutable std::map<std::pair<std::size_t, long>, SparseMatrix<F>> act_cache_;
};

template <ExactField F>
using ModulePtr = std::shared_ptr<const GradedModule<F>>;

/// Homogeneous element of a graded module.
template <ExactField F>
struct Element {
  long codegree = 0;
  SparseVec<F> vec;
};

/// m * v for a monomial m and v in M^n; variables are applied last first,
/// so that x_1^a ... x_k^b . v = x_1^a(...(x_k^b v)).
template <ExactField F>
SparseVec<F> mul_monomial(const GradedModule<F>& M, const Monomial& m, long n, SparseVec<F> v) {
  const auto& R = M.ring();
  for (std::size_t i = R.nvars(); i-- > 0;)
    for (unsigned k = 0; k < m.e[i]; ++k) {
      if (v.empty()) return v;
      v = apply(M.field(), M.act(i, n), v);
      n += R.var(i).codegree;
    }
  return v;
}

template <ExactField F>
SparseVec<F> mul_poly(const GradedModule<F>& M, const Poly<F>& f, long n, const SparseVec<F>& v) {
  SparseVec<F> acc;
  for (const auto& [m, c] : f.terms()) {
    auto w = mul_monomial(M, m, n, v);
    for (auto& e : w) acc.push_back({e.index, M.field().mul(c, e.value)});
  }
  normalize(M.field(), acc);
  return acc;
}

/// Matrix of multiplication by a homogeneous f from M^n.
template <ExactField F>
SparseMatrix<F> poly_matrix(const GradedModule<F>& M, const Poly<F>& f, long n) {
  auto d = f.homogeneous_codegree();
  const long deg = d ? *d : 0;
  SparseMatrix<F> out(M.dim(n + deg), M.dim(n));
  if (f.is_zero()) return out;
  for (std::size_t c = 0; c < out.cols; ++c)
    out.columns[c] = mul_poly(M, f, n, unit_vector(M.field(), static_cast<std::uint32_t>(c)));
  return out;
}

template <ExactField F>
std::vector<std::size_t> dims(const GradedModule<F>& M, long n_min, long n_max) {
  std::vector<std::size_t> out;
  for (long n = n_min; n <= n_max; ++n) out.push_back(M.dim(n));
  return out;
}

/// A graded ring viewed as a module over itself, with a monomial basis in
/// every codegree (standard monomials for quotients).
template <ExactField F>
class RingModule : public GradedModule<F> {
 public:
  using GradedModule<F>::GradedModule;
  virtual Monomial basis_monomial(long n, std::size_t idx) const = 0;
  /// Position of a monomial in the basis, or -1 when it is not a basis monomial.
  virtual long basis_index(const Monomial& m) const = 0;
  /// Normal form of a homogeneous polynomial in codegree deg(f).
  virtual SparseVec<F> element(const Poly<F>& f) const = 0;
  long lowest_codegree() const override { return 0; }
};

template <ExactField F>
using RingPtr = std::shared_ptr<const RingModule<F>>;

/// The polynomial ring P itself.
template <ExactField F>
class PolynomialModule : public RingModule<F> {
 public:
  explicit PolynomialModule(std::shared_ptr<const PolyRing<F>> ring) : RingModule<F>(std::move(ring)) {}

  std::size_t dim(long n) const override { return this->ring().count(n); }
  Monomial basis_monomial(long n, std::size_t idx) const override { return this->ring().monomials(n)[idx]; }
  long basis_index(const Monomial& m) const override { return this->ring().index_of(m); }
  SparseVec<F> element(const Poly<F>& f) const override {
    SparseVec<F> v;
    for (const auto& [m, c] : f.terms()) {
      long i = this->ring().index_of(m);
      if (i < 0) throw Error("monomial outside the polynomial ring");
      v.push_back({static_cast<std::uint32_t>(i), c});
    }
    normalize(this->field(), v);
    return v;
  }

 protected:
  SparseMatrix<F> compute_act(std::size_t var, long n) const override {
    const auto& R = this->ring();
    const auto& mons = R.monomials(n);
    const long target = n + R.var(var).codegree;
    SparseMatrix<F> out(R.count(target), mons.size());
    const Monomial x = R.variable(var);
    for (std::size_t c = 0; c < mons.size(); ++c) {
      int s = R.product_sign(x, mons[c]);
      if (s == 0) continue;
      long i = R.index_of(R.product(x, mons[c]));
      out.columns[c].push_back({static_cast<std::uint32_t>(i), s > 0 ? this->field().one() : this->field().neg(this->field().one())});
    }
    return out;
  }
};

/// Ambient module modulo the submodule generated by finitely many
/// homogeneous elements. The basis of (A/N)^n is the set of coordinates of
/// A^n that are not pivots of the echelon form of N^n.
template <ExactField F>
class Quotient : public GradedModule<F> {
 public:
  Quotient(ModulePtr<F> ambient, std::vector<Element<F>> gens)
      : GradedModule<F>(ambient->ring_ptr()), ambient_(std::move(ambient)), gens_(std::move(gens)) {
    for (const auto& g : gens_) {
      for (const auto& e : g.vec)
        if (e.index >= ambient_->dim(g.codegree)) throw Error("submodule generator outside the ambient module");
    }
  }

  const GradedModule<F>& ambient() const { return *ambient_; }
  const ModulePtr<F>& ambient_ptr() const { return ambient_; }
  const std::vector<Element<F>>& generators() const { return gens_; }

  std::size_t dim(long n) const override { return degree(n).basis.size(); }
  long lowest_codegree() const override { return ambient_->lowest_codegree(); }

  /// Echelon basis of the submodule in codegree n.
  const Echelon<F>& submodule(long n) const { return degree(n).sub; }

  /// Ambient coordinate of each quotient basis vector.
  const std::vector<std::uint32_t>& basis(long n) const { return degree(n).basis; }

  SparseVec<F> project(long n, const SparseVec<F>& v) const {
    const auto& d = degree(n);
    auto r = d.sub.reduce(v);
    for (auto& e : r) e.index = static_cast<std::uint32_t>(d.position[e.index]);
    return r;
  }

  SparseVec<F> lift(long n, const SparseVec<F>& v) const {
    const auto& d = degree(n);
    auto r = v;
    for (auto& e : r) e.index = d.basis[e.index];
    return r;
  }

 protected:
  SparseMatrix<F> compute_act(std::size_t var, long n) const override {
    const long target = n + this->ring().var(var).codegree;
    const auto& src = degree(n);
    SparseMatrix<F> out(dim(target), src.basis.size());
    const auto& a = ambient_->act(var, n);
    for (std::size_t c = 0; c < src.basis.size(); ++c) out.columns[c] = project(target, a.columns[src.basis[c]]);
    return out;
  }

 private:
  struct Degree {
    Echelon<F> sub;
    std::vector<std::uint32_t> basis;
    std::vector<long> position;
  };

  const Degree& degree(long n) const {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    const std::size_t d = ambient_->dim(n);
    Echelon<F> sub(this->field(), d);
    if (d > 0) {
      const auto& R = this->ring();
      for (std::size_t v = 0; v < R.nvars(); ++v) {
        const long m = n - R.var(v).codegree;
        if (m < lowest_codegree() || ambient_->dim(m) == 0) continue;
        const auto& lower = degree(m).sub.rows();
        if (lower.empty()) continue;
        const auto& a = ambient_->act(v, m);
        for (const auto& row : lower) sub.insert(apply(this->field(), a, row));
      }
      for (const auto& g : gens_)
        if (g.codegree == n) sub.insert(g.vec);
    }
    Degree deg{std::move(sub), {}, std::vector<long>(d, -1)};
    deg.basis = deg.sub.non_pivots();
    for (std::size_t i = 0; i < deg.basis.size(); ++i) deg.position[deg.basis[i]] = static_cast<long>(i);
    return cache_.emplace(n, std::move(deg)).first->second;
  }

  ModulePtr<F> ambient_;
  std::vector<Element<F>> gens_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<long, Degree> cache_;
};

/// R = P / (relations), with standard monomials as basis.
template <ExactField F>
class QuotientRing : public RingModule<F> {
 public:
  QuotientRing(std::shared_ptr<const PolyRing<F>> ring, std::vector<Poly<F>> relations)
      : RingModule<F>(ring), poly_(std::make_shared<PolynomialModule<F>>(ring)), relations_(std::move(relations)) {
    std::vector<Element<F>> gens;
    for (const auto& r : relations_) {
      if (r.is_zero()) continue;
      auto d = r.homogeneous_codegree();
      if (!d) throw InputError("relation " + r.to_string() + " is not homogeneous");
      if (*d <= 0) throw InputError("relation " + r.to_string() + " must have positive codegree");
      gens.push_back({*d, poly_->element(r)});
    }
    quotient_ = std::make_shared<Quotient<F>>(poly_, std::move(gens));
  }

  const std::vector<Poly<F>>& relations() const { return relations_; }
  const PolynomialModule<F>& polynomial_module() const { return *poly_; }
  /// Image in R^n of a vector over the monomials of codegree n.
  SparseVec<F> reduce(long n, const SparseVec<F>& v) const { return quotient_->project(n, v); }

  std::size_t dim(long n) const override { return quotient_->dim(n); }
  Monomial basis_monomial(long n, std::size_t idx) const override {
    return this->ring().monomials(n)[quotient_->basis(n)[idx]];
  }
  long basis_index(const Monomial& m) const override {
    long i = this->ring().index_of(m);
    if (i < 0) return -1;
    const long n = this->ring().codegree(m);
    const auto& b = quotient_->basis(n);
    auto it = std::lower_bound(b.begin(), b.end(), static_cast<std::uint32_t>(i));
    return it != b.end() && *it == static_cast<std::uint32_t>(i) ? static_cast<long>(it - b.begin()) : -1;
  }
  SparseVec<F> element(const Poly<F>& f) const override {
    if (f.is_zero()) return {};
    auto d = f.homogeneous_codegree();
    if (!d) throw InputError("element " + f.to_string() + " is not homogeneous");
    return quotient_->project(*d, poly_->element(f));
  }

 protected:
  SparseMatrix<F> compute_act(std::size_t var, long n) const override { return quotient_->act(var, n); }

 private:
  std::shared_ptr<const PolynomialModule<F>> poly_;
  std::vector<Poly<F>> relations_;
  std::shared_ptr<const Quotient<F>> quotient_;
};

/// Direct sum of shifted copies of a ring: F = sum_l Sigma^(c_l) R, with
/// generator e_l in codegree c_l. Basis of F^n: blocks in generator order.
template <ExactField F>
class FreeModule : public GradedModule<F> {
 public:
  FreeModule(RingPtr<F> base, std::vector<long> shifts)
      : GradedModule<F>(base->ring_ptr()), base_(std::move(base)), shifts_(std::move(shifts)) {}

  const RingModule<F>& base() const { return *base_; }
  const RingPtr<F>& base_ptr() const { return base_; }
  const std::vector<long>& shifts() const { return shifts_; }
  std::size_t rank() const { return shifts_.size(); }

  std::size_t dim(long n) const override {
    std::size_t d = 0;
    for (long c : shifts_) d += base_->dim(n - c);
    return d;
  }
  long lowest_codegree() const override {
    if (shifts_.empty()) return 0;
    return *std::min_element(shifts_.begin(), shifts_.end());
  }

  /// Offset of block l inside F^n.
  std::size_t offset(long n, std::size_t l) const {
    std::size_t d = 0;
    for (std::size_t k = 0; k < l; ++k) d += base_->dim(n - shifts_[k]);
    return d;
  }

  /// (block, index inside the block) of a basis vector of F^n.
  std::pair<std::size_t, std::size_t> locate(long n, std::size_t idx) const {
    for (std::size_t l = 0; l < shifts_.size(); ++l) {
      const std::size_t b = base_->dim(n - shifts_[l]);
      if (idx < b) return {l, idx};
      idx -= b;
    }
    throw Error("basis index out of range");
  }

  SparseVec<F> generator(std::size_t l) const {
    return {{static_cast<std::uint32_t>(offset(shifts_[l], l)), this->field().one()}};
  }

  /// Element sum_l f_l e_l for homogeneous f_l with |f_l| + c_l = n.
  SparseVec<F> combination(long n, const std::vector<Poly<F>>& coeffs) const {
    if (coeffs.size() != shifts_.size()) throw InputError("relation has the wrong number of entries");
    SparseVec<F> v;
    for (std::size_t l = 0; l < coeffs.size(); ++l) {
      if (coeffs[l].is_zero()) continue;
      auto d = coeffs[l].homogeneous_codegree();
      if (!d) throw InputError("entry " + coeffs[l].to_string() + " is not homogeneous");
      if (*d + shifts_[l] != n) throw InputError("entry " + coeffs[l].to_string() + " has codegree inconsistent with its column");
      auto w = base_->element(coeffs[l]);
      const auto off = static_cast<std::uint32_t>(offset(n, l));
      for (auto& e : w) v.push_back({e.index + off, e.value});
    }
    normalize(this->field(), v);
    return v;
  }

 protected:
  SparseMatrix<F> compute_act(std::size_t var, long n) const override {
    const long target = n + this->ring().var(var).codegree;
    SparseMatrix<F> out(dim(target), dim(n));
    std::size_t src = 0, dst = 0;
    for (long c : shifts_) {
      const auto& a = base_->act(var, n - c);
      for (std::size_t j = 0; j < a.cols; ++j) out.columns[src + j] = shifted<F>(a.columns[j], static_cast<std::int64_t>(dst));
      src += base_->dim(n - c);
      dst += base_->dim(target - c);
    }
    return out;
  }

 private:
  RingPtr<F> base_;
  std::vector<long> shifts_;
};

/// Cokernel of a presentation matrix over R: generators in the given
/// codegrees, relations given column by column.
template <ExactField F>
class PresentedModule : public GradedModule<F> {
 public:
  PresentedModule(RingPtr<F> base, std::vector<long> gen_codegrees, std::vector<std::vector<Poly<F>>> relations)
      : GradedModule<F>(base->ring_ptr()),
        free_(std::make_shared<FreeModule<F>>(base, std::move(gen_codegrees))),
        relations_(std::move(relations)) {
    std::vector<Element<F>> rel;
    for (const auto& col : relations_) {
      if (col.size() != free_->rank()) throw InputError("relation column has the wrong number of entries");
      std::optional<long> n;
      for (std::size_t l = 0; l < col.size(); ++l) {
        if (col[l].is_zero()) continue;
        auto d = col[l].homogeneous_codegree();
        if (!d) throw InputError("entry " + col[l].to_string() + " is not homogeneous");
        const long c = *d + free_->shifts()[l];
        if (n && *n != c) throw InputError("relation column is not homogeneous");
        n = c;
      }
      if (!n) continue;
      rel.push_back({*n, free_->combination(*n, col)});
    }
    column_codegrees_.reserve(rel.size());
    for (const auto& e : rel) column_codegrees_.push_back(e.codegree);
    quotient_ = std::make_shared<Quotient<F>>(free_, std::move(rel));
  }

  const FreeModule<F>& free() const { return *free_; }
  const std::vector<std::vector<Poly<F>>>& relations() const { return relations_; }
  /// Codegrees of the nonzero relation columns.
  const std::vector<long>& relation_codegrees() const { return column_codegrees_; }
  const Quotient<F>& quotient() const { return *quotient_; }

  std::size_t dim(long n) const override { return quotient_->dim(n); }
  long lowest_codegree() const override { return free_->lowest_codegree(); }

  /// Image of the l-th generator.
  SparseVec<F> generator(std::size_t l) const {
    return quotient_->project(free_->shifts()[l], free_->generator(l));
  }

 protected:
  SparseMatrix<F> compute_act(std::size_t var, long n) const override { return quotient_->act(var, n); }

 private:
  std::shared_ptr<const FreeModule<F>> free_;
  std::vector<std::vector<Poly<F>>> relations_;
  std::vector<long> column_codegrees_;
  std::shared_ptr<const Quotient<F>> quotient_;
};

/// M regarded as a module over another polynomial ring P' through a map
/// sending the i-th variable of P' to images[i], a homogeneous polynomial of
/// the same codegree over M's ring.
template <ExactField F>
class RestrictedModule : public GradedModule<F> {
 public:
  RestrictedModule(ModulePtr<F> inner, std::shared_ptr<const PolyRing<F>> new_ring, std::vector<Poly<F>> images)
      : GradedModule<F>(std::move(new_ring)), inner_(std::move(inner)), images_(std::move(images)) {
    const auto& R = this->ring();
    if (images_.size() != R.nvars()) throw InputError("one image per variable is required");
    if (!(R.field() == inner_->field())) throw InputError("restriction across different fields");
    for (std::size_t i = 0; i < images_.size(); ++i) {
      auto d = images_[i].homogeneous_codegree();
      if (!d || *d != R.var(i).codegree)
        throw InputError("image of " + R.var(i).name + " must be homogeneous of codegree " + std::to_string(R.var(i).codegree));
    }
  }

  const GradedModule<F>& inner() const { return *inner_; }
  const std::vector<Poly<F>>& images() const { return images_; }

  std::size_t dim(long n) const override { return inner_->dim(n); }
  long lowest_codegree() const override { return inner_->lowest_codegree(); }

 protected:
  SparseMatrix<F> compute_act(std::size_t var, long n) const override { return poly_matrix(*inner_, images_[var], n); }

 private:
  ModulePtr<F> inner_;
  std::vector<Poly<F>> images_;
};

/// Module homomorphism out of a free module, determined by generator images.
template <ExactField F>
class FreeMap {
 public:
  FreeMap(std::shared_ptr<const FreeModule<F>> source, ModulePtr<F> target, std::vector<SparseVec<F>> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_->rank()) throw Error("one image per generator is required");
  }

  const FreeModule<F>& source() const { return *source_; }
  const std::shared_ptr<const FreeModule<F>>& source_ptr() const { return source_; }
  const GradedModule<F>& target() const { return *target_; }
  const std::vector<SparseVec<F>>& images() const { return images_; }

  /// The map F^n -> T^n.
  const SparseMatrix<F>& matrix(long n) const {
    std::lock_guard<std::recursive_mutex> lock(*mutex_);
    auto it = cache_->find(n);
    if (it != cache_->end()) return it->second;
    const auto& src = *source_;
    const auto& R = src.base();
    const auto& P = R.ring();
    SparseMatrix<F> out(target_->dim(n), src.dim(n));
    std::size_t col = 0;
    for (std::size_t l = 0; l < src.rank(); ++l) {
      const long c = src.shifts()[l];
      const std::size_t b = R.dim(n - c);
      for (std::size_t r = 0; r < b; ++r, ++col) {
        const Monomial m = R.basis_monomial(n - c, r);
        if (m.is_one()) {
          out.columns[col] = images_[l];
          continue;
        }
        std::size_t v = 0;
        while (!m.e[v]) ++v;
        Monomial rest = m;
        rest.e[v] -= 1;
        const long lower = n - P.var(v).codegree;
        const long ri = R.basis_index(rest);
        if (ri < 0) throw Error("basis monomials do not form an order ideal");
        const auto& prev = matrix(lower);
        const std::size_t pc = src.offset(lower, l) + static_cast<std::size_t>(ri);
        out.columns[col] = apply(target_->field(), target_->act(v, lower), prev.columns[pc]);
      }
    }
    return cache_->emplace(n, std::move(out)).first->second;
  }

  SparseVec<F> operator()(long n, const SparseVec<F>& v) const { return apply(target_->field(), matrix(n), v); }

 private:
  std::shared_ptr<const FreeModule<F>> source_;
  ModulePtr<F> target_;
  std::vector<SparseVec<F>> images_;
  std::shared_ptr<std::recursive_mutex> mutex_ = std::make_shared<std::recursive_mutex>();
  std::shared_ptr<std::map<long, SparseMatrix<F>>> cache_ = std::make_shared<std::map<long, SparseMatrix<F>>>();
};

}  // namespace gwb
