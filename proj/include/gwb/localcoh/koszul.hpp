#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "gwb/graded/module.hpp"

namespace gwb {

/// Subsets of {0, ..., n-1} of a given size, as sorted index lists, in
/// lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

/// Checks a list of ideal generators: homogeneous, positive codegree, and at
/// most one of them anticommuting (so that multiplications commute up to the
/// signs the complexes use).
template <ExactField F>
std::vector<long> validate_ideal(const std::vector<Poly<F>>& elements) {
  if (elements.empty()) throw InputError("the ideal needs at least one generator");
  std::vector<long> d;
  std::size_t odd = 0;
  for (const auto& a : elements) {
    auto c = a.homogeneous_codegree();
    if (!c) throw InputError("ideal generator " + a.to_string() + " is not homogeneous or is zero");
    if (*c <= 0) throw InputError("ideal generator " + a.to_string() + " must have positive codegree");
    if (*c % 2 != 0 && a.field().characteristic() != 2 && !a.ring().strictly_commutative()) ++odd;
    d.push_back(*c);
  }
  if (odd > 1) throw DomainError("at most one odd-codegree ideal generator is supported in odd characteristic");
  return d;
}

/// Multiplication by powers of fixed ring elements on a module, cached per
/// (element, source codegree).
template <ExactField F>
class ElementAction {
 public:
  ElementAction(ModulePtr<F> module, std::vector<Poly<F>> elements)
      : module_(std::move(module)), elements_(std::move(elements)) {
    degrees_ = validate_ideal(elements_);
  }

  const GradedModule<F>& module() const { return *module_; }
  const std::vector<Poly<F>>& elements() const { return elements_; }
  const std::vector<long>& degrees() const { return degrees_; }

  const SparseMatrix<F>& matrix(std::size_t j, long n) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(j, n);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, poly_matrix(*module_, elements_[j], n)).first->second;
  }

  /// alpha_j^s v for v in M^n.
  SparseVec<F> power(std::size_t j, long s, long n, SparseVec<F> v) const {
    for (long k = 0; k < s && !v.empty(); ++k) {
      v = apply(module_->field(), matrix(j, n), v);
      n += degrees_[j];
    }
    return v;
  }

 private:
  ModulePtr<F> module_;
  std::vector<Poly<F>> elements_;
  std::vector<long> degrees_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::size_t, long>, SparseMatrix<F>> cache_;
};

/// Koszul chain complex K(alpha_1..alpha_m; M): K_i^n = sum over |S| = i of
/// M^(n - d_S), d(v e_S) = sum_{j in S} (-1)^pos(j) alpha_j v e_(S - j).
template <ExactField F>
class KoszulComplex {
 public:
  KoszulComplex(ModulePtr<F> module, std::vector<Poly<F>> elements)
      : action_(std::make_shared<ElementAction<F>>(std::move(module), std::move(elements))) {}

  std::size_t length() const { return action_->elements().size(); }
  const GradedModule<F>& module() const { return action_->module(); }

  std::size_t dim(std::size_t i, long n) const {
    std::size_t d = 0;
    for (const auto& S : subsets_of_size(length(), i)) d += module().dim(n - degree(S));
    return d;
  }

  /// d_i: K_i^n -> K_(i-1)^n (i >= 1).
  SparseMatrix<F> differential(std::size_t i, long n) const {
    const auto src = subsets_of_size(length(), i), dst = subsets_of_size(length(), i - 1);
    std::map<std::vector<std::size_t>, std::size_t> dst_offset;
    std::size_t rows = 0;
    for (const auto& T : dst) {
      dst_offset[T] = rows;
      rows += module().dim(n - degree(T));
    }
    SparseMatrix<F> out(rows, dim(i, n));
    const auto& f = module().field();
    std::size_t col = 0;
    for (const auto& S : src) {
      const long a = n - degree(S);
      const std::size_t b = module().dim(a);
      for (std::size_t c = 0; c < b; ++c, ++col) {
        SparseVec<F> acc;
        for (std::size_t p = 0; p < S.size(); ++p) {
          auto T = S;
          T.erase(T.begin() + static_cast<std::ptrdiff_t>(p));
          auto w = action_->power(S[p], 1, a, unit_vector(f, static_cast<std::uint32_t>(c)));
          const auto off = static_cast<std::uint32_t>(dst_offset[T]);
          for (auto& e : w) acc.push_back({e.index + off, p % 2 ? f.neg(e.value) : e.value});
        }
        normalize(f, acc);
        out.columns[col] = std::move(acc);
      }
    }
    return out;
  }

  /// dim H_i at codegree n.
  std::size_t homology(std::size_t i, long n) const {
    const auto& f = module().field();
    const std::size_t di = dim(i, n);
    if (di == 0) return 0;
    const std::size_t rank_out = i == 0 ? 0 : rank(f, differential(i, n));
    const std::size_t rank_in = i == length() ? 0 : rank(f, differential(i + 1, n));
    return di - rank_out - rank_in;
  }

  /// d_i o d_(i+1) = 0 at codegree n.
  bool is_complex_at(long n) const {
    const auto& f = module().field();
    for (std::size_t i = 1; i < length(); ++i)
      if (!is_zero_matrix(compose(f, differential(i, n), differential(i + 1, n)))) return false;
    return true;
  }

  long degree(const std::vector<std::size_t>& S) const {
    long d = 0;
    for (auto j : S) d += action_->degrees()[j];
    return d;
  }

 private:
  std::shared_ptr<const ElementAction<F>> action_;
};

/// dims[i][n - n_min] = dim H_i(alpha; M)^n.
template <ExactField F>
std::vector<std::vector<std::size_t>> koszul_homology(const KoszulComplex<F>& K, long n_min, long n_max) {
  std::vector<std::vector<std::size_t>> out(K.length() + 1);
  for (std::size_t i = 0; i <= K.length(); ++i)
    for (long n = n_min; n <= n_max; ++n) out[i].push_back(K.homology(i, n));
  return out;
}

enum class Verdict { yes, no, inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "true";
    case Verdict::no: return "false";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

/// Regular sequence test by vanishing of H_1 (hence all H_i, i > 0). A
/// nonzero class anywhere gives "no"; vanishing up to n_max gives "yes" only
/// when n_max clears the stability margin.
template <ExactField F>
Verdict is_regular_sequence(const KoszulComplex<F>& K, long n_max, long extra_margin = 0) {
  const long lo = K.module().lowest_codegree();
  for (long n = lo; n <= n_max; ++n)
    if (K.homology(1, n) != 0) return Verdict::no;
  long needed = lo;
  for (std::size_t j = 0; j < K.length(); ++j) needed += K.degree({j});
  needed += extra_margin;
  return n_max >= needed ? Verdict::yes : Verdict::inconclusive;
}

}  // namespace gwb
