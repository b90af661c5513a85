#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gwb/modrep/group.hpp"
#include "gwb/scalars/linalg.hpp"

namespace gwb {

using GF = FiniteField;
using GFMatrix = Matrix<FiniteField>;
using GFVec = std::vector<FiniteField::value_type>;

namespace lin {

inline GFMatrix from_columns(const GF& f, std::size_t rows, const std::vector<GFVec>& cols) {
  GFMatrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  return m;
}

inline std::vector<GFVec> columns(const GFMatrix& m) {
  std::vector<GFVec> out(m.cols(), GFVec(m.rows()));
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) out[j][i] = m.at(i, j);
  return out;
}

/// A basis of span(vectors), as a subset of them.
inline std::vector<GFVec> basis_of(const GF& f, std::size_t dim, const std::vector<GFVec>& vectors) {
  if (vectors.empty()) return {};
  return image_basis(from_columns(f, dim, vectors));
}

inline std::size_t rank_of(const GF& f, std::size_t dim, const std::vector<GFVec>& vectors) {
  if (vectors.empty()) return 0;
  return rank(from_columns(f, dim, vectors));
}

inline bool contains(const GF& f, std::size_t dim, const std::vector<GFVec>& basis, const GFVec& v) {
  if (basis.empty()) {
    for (auto x : v)
      if (!f.is_zero(x)) return false;
    return true;
  }
  return solve(from_columns(f, dim, basis), v).has_value();
}

inline std::vector<GFVec> intersect(const GF& f, std::size_t dim, const std::vector<GFVec>& a, const std::vector<GFVec>& b) {
  if (a.empty() || b.empty()) return {};
  // kernel of [A | -B]
  std::vector<GFVec> cols = a;
  for (const auto& v : b) {
    GFVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = f.neg(v[i]);
    cols.push_back(w);
  }
  std::vector<GFVec> out;
  for (const auto& k : kernel_basis(from_columns(f, dim, cols))) {
    GFVec v(dim, f.zero());
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t i = 0; i < dim; ++i) v[i] = f.add(v[i], f.mul(k[j], a[j][i]));
    out.push_back(v);
  }
  return basis_of(f, dim, out);
}

inline GFVec unit(const GF& f, std::size_t dim, std::size_t i) {
  GFVec v(dim, f.zero());
  v[i] = f.one();
  return v;
}

inline GFMatrix inverse(const GFMatrix& m) {
  const auto& f = m.field();
  GFMatrix inv(f, m.rows(), m.cols());
  for (std::size_t j = 0; j < m.rows(); ++j) {
    auto x = solve(m, unit(f, m.rows(), j));
    if (!x) throw Error("matrix is singular");
    for (std::size_t i = 0; i < m.cols(); ++i) inv.at(i, j) = (*x)[i];
  }
  return inv;
}

}  // namespace lin

/// A finite-dimensional kG-module: one action matrix per group element.
class GroupModule {
 public:
  GroupModule(std::shared_ptr<const GroupTable> group, GF field, std::vector<GFMatrix> action)
      : group_(std::move(group)), field_(std::move(field)), action_(std::move(action)) {
    if (action_.size() != group_->order()) throw InputError("one action matrix per group element is required");
    dim_ = action_[0].rows();
    for (const auto& a : action_)
      if (a.rows() != dim_ || a.cols() != dim_) throw InputError("action matrices must be square of the module dimension");
  }

  static GroupModule trivial(std::shared_ptr<const GroupTable> G, const GF& f) {
    std::vector<GFMatrix> act(G->order(), GFMatrix::identity(f, 1));
    return GroupModule(std::move(G), f, std::move(act));
  }

  /// kG acting on itself by left multiplication, basis the group elements.
  static GroupModule regular(std::shared_ptr<const GroupTable> G, const GF& f) {
    const std::size_t n = G->order();
    std::vector<GFMatrix> act;
    for (std::size_t g = 0; g < n; ++g) {
      GFMatrix m(f, n, n);
      for (std::size_t h = 0; h < n; ++h) m.at(G->mul(g, h), h) = f.one();
      act.push_back(std::move(m));
    }
    return GroupModule(std::move(G), f, std::move(act));
  }

  std::size_t dim() const { return dim_; }
  const GroupTable& group() const { return *group_; }
  const std::shared_ptr<const GroupTable>& group_ptr() const { return group_; }
  const GF& field() const { return field_; }
  const GFMatrix& action(std::size_t g) const { return action_[g]; }

  /// action(g) action(h) = action(gh) and action(e) = 1.
  bool verify() const {
    const auto& G = *group_;
    if (!(action_[G.identity()] == GFMatrix::identity(field_, dim_))) return false;
    for (std::size_t g = 0; g < G.order(); ++g)
      for (std::size_t h = 0; h < G.order(); ++h)
        if (!(action_[g] * action_[h] == action_[G.mul(g, h)])) return false;
    return true;
  }

  /// Action of an element sum_g a_g g of kG on v.
  GFVec act(const GFVec& a, const GFVec& v) const {
    GFVec out(dim_, field_.zero());
    for (std::size_t g = 0; g < a.size(); ++g) {
      if (field_.is_zero(a[g])) continue;
      auto w = action_[g] * v;
      for (std::size_t i = 0; i < dim_; ++i) out[i] = field_.add(out[i], field_.mul(a[g], w[i]));
    }
    return out;
  }

  /// The kG-submodule generated by some vectors, as a basis.
  std::vector<GFVec> generated(const std::vector<GFVec>& gens) const {
    std::vector<GFVec> span;
    for (const auto& v : gens)
      for (std::size_t g = 0; g < group_->order(); ++g) span.push_back(action_[g] * v);
    return lin::basis_of(field_, dim_, span);
  }

  bool is_submodule(const std::vector<GFVec>& basis) const {
    for (const auto& v : basis)
      for (std::size_t g = 0; g < group_->order(); ++g)
        if (!lin::contains(field_, dim_, basis, action_[g] * v)) return false;
    return true;
  }

  /// The submodule with the given basis, with the action in that basis.
  GroupModule submodule(const std::vector<GFVec>& basis) const {
    const std::size_t r = basis.size();
    std::vector<GFMatrix> act;
    if (r == 0) {
      act.assign(group_->order(), GFMatrix(field_, 0, 0));
      return GroupModule(group_, field_, std::move(act));
    }
    const GFMatrix B = lin::from_columns(field_, dim_, basis);
    for (std::size_t g = 0; g < group_->order(); ++g) {
      GFMatrix m(field_, r, r);
      for (std::size_t j = 0; j < r; ++j) {
        auto x = solve(B, action_[g] * basis[j]);
        if (!x) throw Error("subspace is not a submodule");
        for (std::size_t i = 0; i < r; ++i) m.at(i, j) = (*x)[i];
      }
      act.push_back(std::move(m));
    }
    return GroupModule(group_, field_, std::move(act));
  }

  /// Augmentation-ideal image I(H) M = span{(h - 1) v} for h in a subset H.
  std::vector<GFVec> augmentation_image(const std::vector<std::size_t>& H) const {
    std::vector<GFVec> span;
    for (auto h : H)
      for (std::size_t j = 0; j < dim_; ++j) {
        GFVec v(dim_);
        for (std::size_t i = 0; i < dim_; ++i) v[i] = field_.sub(action_[h].at(i, j), i == j ? field_.one() : field_.zero());
        span.push_back(v);
      }
    return lin::basis_of(field_, dim_, span);
  }

 private:
  std::shared_ptr<const GroupTable> group_;
  GF field_;
  std::vector<GFMatrix> action_;
  std::size_t dim_ = 0;
};

/// Direct sum of modules.
inline GroupModule direct_sum(const std::vector<const GroupModule*>& parts, std::shared_ptr<const GroupTable> G, const GF& f) {
  std::size_t n = 0;
  for (auto p : parts) n += p->dim();
  std::vector<GFMatrix> act;
  for (std::size_t g = 0; g < G->order(); ++g) {
    GFMatrix m(f, n, n);
    std::size_t off = 0;
    for (auto p : parts) {
      for (std::size_t i = 0; i < p->dim(); ++i)
        for (std::size_t j = 0; j < p->dim(); ++j) m.at(off + i, off + j) = p->action(g).at(i, j);
      off += p->dim();
    }
    act.push_back(std::move(m));
  }
  return GroupModule(std::move(G), f, std::move(act));
}

}  // namespace gwb
