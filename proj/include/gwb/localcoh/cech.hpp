#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gwb/localcoh/koszul.hpp"

namespace gwb {

enum class CellFlag { exact, uncertified, clipped };

inline std::string to_string(CellFlag f) {
  switch (f) {
    case CellFlag::exact: return "exact";
    case CellFlag::uncertified: return "uncertified";
    case CellFlag::clipped: return "window-clipped";
  }
  return "uncertified";
}

/// dims[i][n - n_min] = dim H^i(M)^n with a flag per cell.
struct CohomologyTable {
  std::string method;
  long n_min = 0;
  long n_max = -1;
  std::vector<std::vector<std::size_t>> dims;
  std::vector<std::vector<CellFlag>> flags;

  CohomologyTable() = default;
  CohomologyTable(std::string m, std::size_t indices, long lo, long hi)
      : method(std::move(m)), n_min(lo), n_max(hi),
        dims(indices, std::vector<std::size_t>(static_cast<std::size_t>(std::max(0L, hi - lo + 1)), 0)),
        flags(indices, std::vector<CellFlag>(static_cast<std::size_t>(std::max(0L, hi - lo + 1)), CellFlag::exact)) {}

  std::size_t indices() const { return dims.size(); }
  std::size_t dim(std::size_t i, long n) const {
    if (i >= dims.size() || n < n_min || n > n_max) return 0;
    return dims[i][static_cast<std::size_t>(n - n_min)];
  }
  CellFlag flag(std::size_t i, long n) const {
    if (i >= dims.size() || n < n_min || n > n_max) return CellFlag::exact;
    return flags[i][static_cast<std::size_t>(n - n_min)];
  }
  void set(std::size_t i, long n, std::size_t d, CellFlag f) {
    dims[i][static_cast<std::size_t>(n - n_min)] = d;
    flags[i][static_cast<std::size_t>(n - n_min)] = f;
  }
  bool all_exact() const {
    for (const auto& row : flags)
      for (auto f : row)
        if (f != CellFlag::exact) return false;
    return true;
  }
  bool row_is_zero(std::size_t i) const {
    if (i >= dims.size()) return true;
    return std::all_of(dims[i].begin(), dims[i].end(), [](std::size_t d) { return d == 0; });
  }
  /// Codegrees where H^i is nonzero.
  std::vector<long> support(std::size_t i) const {
    std::vector<long> out;
    for (long n = n_min; n <= n_max; ++n)
      if (dim(i, n)) out.push_back(n);
    return out;
  }
};

struct CechOptions {
  long n_min = -20;
  long n_max = 20;
  long stab_bound = 16;
};

/// Local cohomology H^i_I(M) as the colimit over s of the cohomology of the
/// Koszul cochain complexes K^(alpha^s; M), whose degree-i term at codegree n
/// is sum over |S| = i of M^(n + s d_S) (the element m / alpha_S^s). The
/// transition s -> s+K multiplies the S-component by alpha_S^K; the colimit
/// of these complexes is the Cech complex.
template <ExactField F>
class CechComplex {
 public:
  CechComplex(ModulePtr<F> module, std::vector<Poly<F>> elements)
      : action_(std::make_shared<ElementAction<F>>(std::move(module), std::move(elements))) {}

  std::size_t ngens() const { return action_->elements().size(); }
  const GradedModule<F>& module() const { return action_->module(); }
  const std::vector<long>& degrees() const { return action_->degrees(); }

  long degree(const std::vector<std::size_t>& S) const {
    long d = 0;
    for (auto j : S) d += degrees()[j];
    return d;
  }

  std::size_t dim(std::size_t i, long s, long n) const {
    std::size_t d = 0;
    for (const auto& S : subsets_of_size(ngens(), i)) d += module().dim(n + s * degree(S));
    return d;
  }

  /// delta: C^i_s -> C^(i+1)_s at codegree n.
  SparseMatrix<F> differential(std::size_t i, long s, long n) const {
    const auto src = subsets_of_size(ngens(), i);
    const auto offsets = block_offsets(i + 1, s, n);
    SparseMatrix<F> out(dim(i + 1, s, n), dim(i, s, n));
    const auto& f = module().field();
    std::size_t col = 0;
    for (const auto& S : src) {
      const long a = n + s * degree(S);
      const std::size_t b = module().dim(a);
      for (std::size_t c = 0; c < b; ++c, ++col) {
        SparseVec<F> acc;
        for (std::size_t j = 0; j < ngens(); ++j) {
          if (std::find(S.begin(), S.end(), j) != S.end()) continue;
          std::size_t below = 0;
          for (auto k : S) below += k < j;
          auto T = S;
          T.insert(std::upper_bound(T.begin(), T.end(), j), j);
          auto w = action_->power(j, s, a, unit_vector(f, static_cast<std::uint32_t>(c)));
          const auto off = static_cast<std::uint32_t>(offsets.at(T));
          for (auto& e : w) acc.push_back({e.index + off, below % 2 ? f.neg(e.value) : e.value});
        }
        normalize(f, acc);
        out.columns[col] = std::move(acc);
      }
    }
    return out;
  }

  /// Transition C^i_s -> C^i_(s+K) at codegree n.
  SparseVec<F> transition(std::size_t i, long s, long K, long n, const SparseVec<F>& v) const {
    const auto subsets = subsets_of_size(ngens(), i);
    const auto dst = block_offsets(i, s + K, n);
    SparseVec<F> out;
    std::size_t start = 0;
    for (const auto& S : subsets) {
      const long a = n + s * degree(S);
      const std::size_t b = module().dim(a);
      SparseVec<F> part;
      for (const auto& e : v)
        if (e.index >= start && e.index < start + b) part.push_back({static_cast<std::uint32_t>(e.index - start), e.value});
      start += b;
      if (part.empty()) continue;
      long cur = a;
      for (auto j : S) {
        part = action_->power(j, K, cur, part);
        cur += K * degrees()[j];
      }
      const auto off = static_cast<std::uint32_t>(dst.at(S));
      for (auto& e : part) out.push_back({e.index + off, e.value});
    }
    normalize(module().field(), out);
    return out;
  }

  /// Dimension of the image of H^i_s in H^i_(s+K) at codegree n.
  std::size_t surviving_rank(std::size_t i, long s, long K, long n) const {
    const auto& f = module().field();
    const long t = s + K;
    Echelon<F> e(f, dim(i, t, n));
    if (i > 0) {
      const auto b = differential(i - 1, t, n);
      for (const auto& c : b.columns) e.insert(c);
    }
    const std::size_t base = e.rank();
    std::vector<SparseVec<F>> Z;
    const auto d = differential(i, s, n);
    if (i == ngens()) {
      for (std::size_t c = 0; c < d.cols; ++c) Z.push_back(unit_vector(f, static_cast<std::uint32_t>(c)));
    } else {
      Z = kernel_basis(f, d);
    }
    for (const auto& z : Z) e.insert(transition(i, s, K, n, z));
    return e.rank() - base;
  }

  /// Colimit dimension at (i, n) with a stabilization certificate: with
  /// rho_t = surviving_rank(s0 + t, 1 + t), the cell is exact at the first t
  /// where rho_t = rho_(t+1) = rho_(t+2), t + 2 <= stab_bound.
  std::pair<std::size_t, CellFlag> cell(std::size_t i, long n, long stab_bound) const {
    if (i > ngens()) return {0, CellFlag::exact};
    const long s0 = start_power(n);
    std::vector<std::size_t> rho;
    for (long t = 0; t <= stab_bound; ++t) {
      rho.push_back(surviving_rank(i, s0 + t, 1 + t, n));
      const auto k = rho.size();
      if (k >= 3 && rho[k - 1] == rho[k - 2] && rho[k - 2] == rho[k - 3]) return {rho[k - 1], CellFlag::exact};
    }
    return {rho.back(), CellFlag::uncertified};
  }

  long start_power(long n) const {
    const long lo = module().lowest_codegree();
    const long dmin = *std::min_element(degrees().begin(), degrees().end());
    long s0 = 1;
    if (lo > n) s0 = std::max(s0, (lo - n + dmin - 1) / dmin);
    return s0;
  }

 private:
  std::map<std::vector<std::size_t>, std::size_t> block_offsets(std::size_t i, long s, long n) const {
    std::map<std::vector<std::size_t>, std::size_t> off;
    std::size_t acc = 0;
    for (const auto& S : subsets_of_size(ngens(), i)) {
      off[S] = acc;
      acc += module().dim(n + s * degree(S));
    }
    return off;
  }

  std::shared_ptr<const ElementAction<F>> action_;
};

template <ExactField F>
CohomologyTable local_cohomology_cech(ModulePtr<F> module, std::vector<Poly<F>> ideal, const CechOptions& opt = {}) {
  CechComplex<F> C(std::move(module), std::move(ideal));
  CohomologyTable T("cech", C.ngens() + 1, opt.n_min, opt.n_max);
  for (std::size_t i = 0; i <= C.ngens(); ++i)
    for (long n = opt.n_min; n <= opt.n_max; ++n) {
      auto [d, flag] = C.cell(i, n, opt.stab_bound);
      T.set(i, n, d, flag);
    }
  return T;
}

}  // namespace gwb
