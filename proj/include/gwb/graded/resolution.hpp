#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gwb/graded/module.hpp"
#include "gwb/hilbert/series.hpp"

namespace gwb {

struct ResolutionOptions {
  long codegree_max = 24;
  std::size_t h_max = 12;
  /// Codegree gap assumed to separate a generator from its syzygies when
  /// deciding whether a stage may have been cut off; 0 picks a default from
  /// the variable and relation codegrees.
  long margin = 0;
};

namespace detail {

template <ExactField F>
struct StageGenerators {
  std::vector<long> codegrees;
  std::vector<SparseVec<F>> images;
};

/// Minimal generators of the submodule K of `target` whose codegree-n piece
/// has basis kernel(n): a vector is new iff it is not in m*K at its codegree.
template <ExactField F>
StageGenerators<F> minimal_generators(const GradedModule<F>& target, long lo, long hi,
                                      const std::function<std::vector<SparseVec<F>>(long)>& kernel) {
  StageGenerators<F> out;
  std::map<long, std::vector<SparseVec<F>>> K;
  const auto& R = target.ring();
  for (long n = lo; n <= hi; ++n) {
    auto basis = kernel(n);
    if (basis.empty()) {
      K[n] = {};
      continue;
    }
    Echelon<F> e(target.field(), target.dim(n));
    for (std::size_t v = 0; v < R.nvars(); ++v) {
      const long m = n - R.var(v).codegree;
      auto it = K.find(m);
      if (it == K.end() || it->second.empty()) continue;
      const auto& a = target.act(v, m);
      for (const auto& k : it->second) e.insert(apply(target.field(), a, k));
    }
    for (const auto& k : basis)
      if (e.insert(k)) {
        out.codegrees.push_back(n);
        out.images.push_back(k);
      }
    K[n] = std::move(basis);
  }
  return out;
}

}  // namespace detail

/// Minimal graded free resolution of M over R, computed degreewise up to
/// a codegree bound. Stage i is F_i with differential d_i: F_i -> F_(i-1),
/// and d_0: F_0 -> M.
template <ExactField F>
class MinimalResolution {
 public:
  MinimalResolution(RingPtr<F> ring, ModulePtr<F> module, ResolutionOptions opts = {})
      : ring_(std::move(ring)), module_(std::move(module)), opts_(opts) {
    if (!(ring_->ring() == module_->ring())) throw InputError("module and ring have different variables");
    margin_ = opts_.margin > 0 ? opts_.margin : default_margin();
    build();
  }

  const ResolutionOptions& options() const { return opts_; }
  long margin() const { return margin_; }
  const RingModule<F>& ring() const { return *ring_; }
  const GradedModule<F>& module() const { return *module_; }

  /// Number of computed stages (h_max + 1).
  std::size_t length() const { return free_.size(); }
  const FreeModule<F>& free(std::size_t i) const { return *free_[i]; }
  const std::shared_ptr<const FreeModule<F>>& free_ptr(std::size_t i) const { return free_[i]; }
  const FreeMap<F>& differential(std::size_t i) const { return *maps_[i]; }
  const std::vector<long>& generator_codegrees(std::size_t i) const { return free_[i]->shifts(); }

  std::size_t betti(std::size_t i) const { return free_[i]->rank(); }
  std::size_t betti(std::size_t i, long j) const {
    const auto& s = free_[i]->shifts();
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), j));
  }
  std::vector<std::size_t> betti_totals() const {
    std::vector<std::size_t> b;
    for (std::size_t i = 0; i < length(); ++i) b.push_back(betti(i));
    return b;
  }

  /// First stage whose generator set may extend past codegree_max.
  std::optional<std::size_t> first_clipped_stage() const { return clipped_; }

  /// No differential has a nonzero constant entry.
  bool is_minimal() const {
    for (std::size_t i = 1; i < length(); ++i) {
      const auto& src = *free_[i];
      const auto& dst = *free_[i - 1];
      for (std::size_t l = 0; l < src.rank(); ++l) {
        const long c = src.shifts()[l];
        const auto& img = maps_[i]->images()[l];
        for (std::size_t k = 0; k < dst.rank(); ++k) {
          if (dst.shifts()[k] != c) continue;
          const auto at = static_cast<std::uint32_t>(dst.offset(c, k));
          for (const auto& e : img)
            if (e.index == at) return false;
        }
      }
    }
    return true;
  }

  /// d_(i) o d_(i+1) = 0 and d_0 o d_1 = 0 on every codegree of the window.
  bool is_complex() const {
    const auto& f = module_->field();
    for (std::size_t i = 1; i < length(); ++i)
      for (long n = free_[i]->lowest_codegree(); n <= opts_.codegree_max; ++n) {
        if (free_[i]->dim(n) == 0) continue;
        if (!is_zero_matrix(compose(f, maps_[i - 1]->matrix(n), maps_[i]->matrix(n)))) return false;
      }
    return true;
  }

  /// Exactness at each F_i (i >= 1) and surjectivity onto M, degreewise.
  bool is_exact() const {
    const auto& f = module_->field();
    for (long n = module_->lowest_codegree(); n <= opts_.codegree_max; ++n) {
      if (length() > 0 && rank(f, maps_[0]->matrix(n)) != module_->dim(n)) return false;
      for (std::size_t i = 0; i + 1 < length(); ++i) {
        const auto& d = maps_[i]->matrix(n);
        const auto& up = maps_[i + 1]->matrix(n);
        if (rank(f, up) + rank(f, d) != free_[i]->dim(n)) return false;
      }
    }
    return true;
  }

  /// Codegrees n in the reliable range where sum_i (-1)^i dim F_i^n != dim M^n.
  std::vector<long> euler_mismatches() const {
    std::vector<long> bad;
    for (long n = module_->lowest_codegree(); n <= euler_bound(); ++n) {
      long s = 0;
      for (std::size_t i = 0; i < length(); ++i) s += (i % 2 ? -1 : 1) * static_cast<long>(free_[i]->dim(n));
      if (s != static_cast<long>(module_->dim(n))) bad.push_back(n);
    }
    return bad;
  }

  /// Last codegree at which unresolved stages cannot contribute.
  long euler_bound() const {
    long dmin = 1;
    const auto& R = ring_->ring();
    if (R.nvars() > 0) {
      dmin = R.var(0).codegree;
      for (const auto& v : R.vars()) dmin = std::min(dmin, v.codegree);
    }
    return std::min(opts_.codegree_max, module_->lowest_codegree() + static_cast<long>(opts_.h_max + 1) * dmin - 1);
  }

 private:
  long default_margin() const {
    long m = 1;
    for (const auto& v : ring_->ring().vars()) m = std::max(m, v.codegree);
    if (auto q = dynamic_cast<const QuotientRing<F>*>(ring_.get()))
      for (const auto& r : q->relations())
        if (auto d = r.homogeneous_codegree()) m = std::max(m, *d);
    if (auto p = dynamic_cast<const PresentedModule<F>*>(module_.get())) {
      const auto& s = p->free().shifts();
      if (!s.empty()) {
        const long lo = *std::min_element(s.begin(), s.end());
        for (long c : p->relation_codegrees()) m = std::max(m, c - lo);
      }
    }
    return m;
  }

  void build() {
    const long N = opts_.codegree_max;
    const long lo0 = module_->lowest_codegree();
    ModulePtr<F> target = module_;
    std::shared_ptr<const FreeMap<F>> prev;
    bool complete = true;
    long prev_top = lo0;
    if (auto p = dynamic_cast<const PresentedModule<F>*>(module_.get())) {
      const auto& s = p->free().shifts();
      if (!s.empty()) prev_top = *std::max_element(s.begin(), s.end());
    }
    if (prev_top > N) complete = false;
    for (std::size_t i = 0; i <= opts_.h_max; ++i) {
      const long lo = i == 0 ? lo0 : (free_.back()->rank() ? free_.back()->lowest_codegree() : N + 1);
      std::function<std::vector<SparseVec<F>>(long)> kernel;
      if (i == 0) {
        kernel = [this](long n) {
          std::vector<SparseVec<F>> b;
          for (std::size_t c = 0; c < module_->dim(n); ++c) b.push_back(unit_vector(module_->field(), static_cast<std::uint32_t>(c)));
          return b;
        };
      } else {
        kernel = [prev, this](long n) { return kernel_basis(module_->field(), prev->matrix(n)); };
      }
      auto gens = detail::minimal_generators<F>(*target, lo, N, kernel);
      auto fm = std::make_shared<const FreeModule<F>>(ring_, gens.codegrees);
      auto map = std::make_shared<const FreeMap<F>>(fm, target, std::move(gens.images));
      if (i > 0) {
        complete = complete && prev_top <= N - margin_;
        if (!complete && !clipped_) clipped_ = i;
      } else if (!complete) {
        clipped_ = 0;
      }
      if (!gens.codegrees.empty()) prev_top = gens.codegrees.back();
      free_.push_back(fm);
      maps_.push_back(map);
      target = fm;
      prev = map;
    }
  }

  RingPtr<F> ring_;
  ModulePtr<F> module_;
  ResolutionOptions opts_;
  long margin_ = 1;
  std::vector<std::shared_ptr<const FreeModule<F>>> free_;
  std::vector<std::shared_ptr<const FreeMap<F>>> maps_;
  std::optional<std::size_t> clipped_;
};

/// The residue field k = R/m as an R-module.
template <ExactField F>
std::shared_ptr<const Quotient<F>> residue_field(const RingPtr<F>& R) {
  std::vector<Element<F>> gens;
  for (std::size_t v = 0; v < R->ring().nvars(); ++v)
    gens.push_back({R->ring().var(v).codegree, R->element(Poly<F>::variable(R->ring_ptr(), v))});
  return std::make_shared<const Quotient<F>>(R, std::move(gens));
}

struct GrowthClass {
  enum class Kind { finite, bounded, polynomial, exponential, inconclusive };
  Kind kind = Kind::inconclusive;
  int degree = 0;

  std::string to_string() const {
    switch (kind) {
      case Kind::finite: return "finite";
      case Kind::bounded: return "bounded";
      case Kind::polynomial: return "polynomial(" + std::to_string(degree) + ")";
      case Kind::exponential: return "exponential";
      case Kind::inconclusive: return "inconclusive";
    }
    return "inconclusive";
  }
  friend bool operator==(const GrowthClass& a, const GrowthClass& b) {
    return a.kind == b.kind && (a.kind != Kind::polynomial || a.degree == b.degree);
  }
};

/// Growth of a Betti sequence b[0..h], h >= 10.
inline GrowthClass ext_growth_class(const std::vector<std::size_t>& b) {
  using K = GrowthClass::Kind;
  if (b.size() < 11) return {K::inconclusive, 0};
  if (b.back() == 0) return {K::finite, 0};
  const std::size_t half = b.size() / 2;
  const auto first_max = *std::max_element(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(half));
  const auto second_max = *std::max_element(b.begin() + static_cast<std::ptrdiff_t>(half), b.end());
  bool tail_nonzero = std::all_of(b.begin() + static_cast<std::ptrdiff_t>(half), b.end(), [](std::size_t x) { return x > 0; });
  if (tail_nonzero && second_max <= first_max) return {K::bounded, 0};
  std::vector<long> d(b.begin(), b.end());
  for (int deg = 1; deg <= 3; ++deg) {
    std::vector<long> next;
    for (std::size_t i = 1; i < d.size(); ++i) next.push_back(d[i] - d[i - 1]);
    d = std::move(next);
    if (d.size() < 4) break;
    bool constant = true;
    for (std::size_t i = d.size() - 4; i + 1 < d.size(); ++i)
      if (d[i] != d[i + 1]) constant = false;
    if (constant && d.back() != 0) return {K::polynomial, deg};
  }
  bool ratio = tail_nonzero;
  for (std::size_t i = half; i + 1 < b.size() && ratio; ++i)
    if (4 * b[i + 1] < 5 * b[i]) ratio = false;
  if (ratio) return {K::exponential, 0};
  return {K::inconclusive, 0};
}

/// dim M^n for n = 0..n_max.
template <ExactField F>
std::vector<std::size_t> hilbert_prefix(const GradedModule<F>& M, long n_max) {
  return dims(M, 0, n_max);
}

inline bool compare_series(const std::vector<std::size_t>& prefix, const Series& s) {
  if (prefix.empty()) return true;
  auto e = s.expand(0, static_cast<long>(prefix.size()) - 1);
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (e.coeffs[i] != mpq_class(static_cast<unsigned long>(prefix[i]))) return false;
  return true;
}

}  // namespace gwb
