#pragma once

#include <vector>

#include "gwb/modrep/algebra.hpp"

namespace gwb {

/// One stage of the squeezed resolution: P_i with d_i: P_i -> P_(i-1)
/// (P_(-1) = k), N_i = ker d_i and M_i its k-coradical limit.
struct SqueezedStage {
  GroupModule P;
  GFMatrix d;
  std::size_t kernel_dim = 0;
  CoradicalTower tower;
  std::vector<std::size_t> multiplicities;
  bool cover_surjective = true;
  bool cover_minimal = true;
};

struct SqueezedResolution {
  std::vector<SqueezedStage> stages;
  /// Unaugmented homology: H_0 = P_0 / im d_1, H_i = ker d_i / im d_(i+1).
  std::vector<std::size_t> homology;
  /// d_i d_(i+1) = 0 for all computed i.
  bool is_complex = true;

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> out;
    for (const auto& s : stages) out.push_back(s.P.dim());
    return out;
  }
};

namespace detail {

inline GroupModule zero_module(const std::shared_ptr<const GroupTable>& G, const GF& f) {
  return GroupModule(G, f, std::vector<GFMatrix>(G->order(), GFMatrix(f, 0, 0)));
}

inline std::size_t safe_rank(const GFMatrix& m) { return m.rows() == 0 || m.cols() == 0 ? 0 : rank(m); }

inline std::vector<GFVec> safe_kernel(const GF& f, const GFMatrix& m) {
  if (m.cols() == 0) return {};
  if (m.rows() == 0) {
    std::vector<GFVec> out;
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(lin::unit(f, m.cols(), j));
    return out;
  }
  return kernel_basis(m);
}

}  // namespace detail

/// Computes P_0, ..., P_(steps+1) and H_0, ..., H_steps. The kernel and tower
/// of the last stage are left empty.
inline SqueezedResolution squeezed_resolution(const GroupAlgebra& A, std::size_t steps) {
  const auto& f = A.field();
  const auto& G = A.group_ptr();
  SqueezedResolution out;
  {
    const auto k = GroupModule::trivial(G, f);
    auto pc = projective_cover(A, k);
    SqueezedStage s{std::move(pc.P), std::move(pc.map)};
    s.multiplicities = std::move(pc.multiplicities);
    s.cover_surjective = pc.surjective;
    s.cover_minimal = pc.minimal;
    out.stages.push_back(std::move(s));
  }
  for (std::size_t i = 0; i <= steps; ++i) {
    auto& cur = out.stages.back();
    const auto N = detail::safe_kernel(f, cur.d);
    cur.kernel_dim = N.size();
    const auto Nmod = cur.P.submodule(N);
    cur.tower = k_coradical_tower(Nmod);
    // M_i in P_i coordinates
    std::vector<GFVec> Mbasis;
    for (const auto& y : cur.tower.limit) {
      GFVec v(cur.P.dim(), f.zero());
      for (std::size_t c = 0; c < y.size(); ++c)
        for (std::size_t r = 0; r < v.size(); ++r) v[r] = f.add(v[r], f.mul(y[c], N[c][r]));
      Mbasis.push_back(v);
    }
    const auto Mmod = cur.P.submodule(Mbasis);
    auto pc = projective_cover(A, Mmod);
    // d_(i+1) = inclusion of M_i composed with the cover
    GFMatrix d(f, cur.P.dim(), pc.P.dim());
    for (std::size_t j = 0; j < pc.P.dim(); ++j)
      for (std::size_t c = 0; c < Mbasis.size(); ++c)
        for (std::size_t r = 0; r < cur.P.dim(); ++r) d.at(r, j) = f.add(d.at(r, j), f.mul(pc.map.at(c, j), Mbasis[c][r]));
    SqueezedStage next{pc.P.dim() ? std::move(pc.P) : detail::zero_module(G, f), std::move(d)};
    next.multiplicities = std::move(pc.multiplicities);
    next.cover_surjective = pc.surjective;
    next.cover_minimal = pc.minimal;
    out.stages.push_back(std::move(next));
  }
  for (std::size_t i = 0; i + 1 < out.stages.size(); ++i) {
    const auto& a = out.stages[i].d;
    const auto& b = out.stages[i + 1].d;
    if (a.rows() && b.cols() && a.cols()) {
      const auto c = a * b;
      for (std::size_t r = 0; r < c.rows(); ++r)
        for (std::size_t s = 0; s < c.cols(); ++s)
          if (!f.is_zero(c.at(r, s))) out.is_complex = false;
    }
  }
  for (std::size_t i = 0; i <= steps; ++i) {
    const std::size_t cycles = i == 0 ? out.stages[0].P.dim() : out.stages[i].kernel_dim;
    out.homology.push_back(cycles - detail::safe_rank(out.stages[i + 1].d));
  }
  return out;
}

}  // namespace gwb
