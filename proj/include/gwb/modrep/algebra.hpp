#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gwb/modrep/module.hpp"

namespace gwb {

/// A one-dimensional representation of G/P, by its values on the cosets.
struct Character {
  std::vector<FiniteField::value_type> values;
  std::string label;
  bool trivial = false;
};

/// The group algebra kG of a group with a normal Sylow p-subgroup P and
/// abelian p'-quotient. Then rad kG = kG I(P), the simple modules are the
/// characters of G/P, and the PIMs are kG e for lifted character idempotents.
class GroupAlgebra {
 public:
  GroupAlgebra(std::shared_ptr<const GroupTable> G, GF field)
      : G_(std::move(G)), f_(std::move(field)), regular_(GroupModule::regular(G_, f_)) {
    if (f_.characteristic() != G_->prime())
      throw InputError("field characteristic " + std::to_string(f_.characteristic()) + " does not match the group prime " +
                       std::to_string(G_->prime()));
    check_quotient();
    find_characters();
    for (const auto& chi : chars_) idempotents_.push_back(lift_idempotent(chi));
  }

  const GroupTable& group() const { return *G_; }
  const std::shared_ptr<const GroupTable>& group_ptr() const { return G_; }
  const GF& field() const { return f_; }
  std::size_t dim() const { return G_->order(); }
  const GroupModule& regular() const { return regular_; }

  GFVec multiply(const GFVec& a, const GFVec& b) const {
    GFVec c(dim(), f_.zero());
    for (std::size_t g = 0; g < dim(); ++g) {
      if (f_.is_zero(a[g])) continue;
      for (std::size_t h = 0; h < dim(); ++h)
        if (!f_.is_zero(b[h])) c[G_->mul(g, h)] = f_.add(c[G_->mul(g, h)], f_.mul(a[g], b[h]));
    }
    return c;
  }

  GFVec element(std::size_t g) const { return lin::unit(f_, dim(), g); }

  /// Basis of rad kG = kG I(P).
  std::vector<GFVec> radical() const { return regular_.augmentation_image(G_->sylow()); }

  /// Smallest L with rad^L = 0.
  std::size_t loewy_length() const {
    const auto r = radical();
    std::vector<GFVec> power = r;
    std::size_t L = 1;
    while (!power.empty()) {
      if (L > dim()) throw Error("radical is not nilpotent");
      std::vector<GFVec> next;
      for (const auto& a : r)
        for (const auto& b : power) next.push_back(multiply(a, b));
      power = lin::basis_of(f_, dim(), next);
      ++L;
    }
    return L;
  }

  const std::vector<Character>& characters() const { return chars_; }
  std::size_t trivial_index() const { return 0; }
  const GFVec& idempotent(std::size_t i) const { return idempotents_[i]; }

  /// The simple module of a character.
  GroupModule simple(std::size_t i) const {
    std::vector<GFMatrix> act;
    for (std::size_t g = 0; g < dim(); ++g) {
      GFMatrix m(f_, 1, 1);
      m.at(0, 0) = chars_[i].values[G_->coset_of()[g]];
      act.push_back(std::move(m));
    }
    return GroupModule(G_, f_, std::move(act));
  }

  /// Basis of the left ideal kG e_i.
  std::vector<GFVec> pim_basis(std::size_t i) const {
    std::vector<GFVec> span;
    for (std::size_t g = 0; g < dim(); ++g) span.push_back(multiply(element(g), idempotents_[i]));
    return lin::basis_of(f_, dim(), span);
  }

  GroupModule pim(std::size_t i) const { return regular_.submodule(pim_basis(i)); }

 private:
  void check_quotient() {
    const auto& G = *G_;
    const auto& c = G.coset_of();
    const auto& reps = G.coset_representatives();
    for (auto a : reps)
      for (auto b : reps)
        if (c[G.mul(a, b)] != c[G.mul(b, a)]) throw DomainError("the quotient by the Sylow subgroup is not abelian; unsupported group class");
  }

  void find_characters() {
    const auto& G = *G_;
    const std::size_t m = G.quotient_order();
    const auto& reps = G.coset_representatives();
    const auto& c = G.coset_of();
    // quotient multiplication
    std::vector<std::vector<std::size_t>> Q(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) Q[a][b] = c[G.mul(reps[a], reps[b])];
    const std::size_t e = c[G.identity()];
    // roots of unity of order dividing m in k
    std::vector<FiniteField::value_type> mu;
    for (FiniteField::value_type x = 1; x < f_.size(); ++x)
      if (f_.is_one(f_.pow(x, m))) mu.push_back(x);
    // greedy generating set of Q and the words reaching each element
    std::vector<std::size_t> gens;
    std::vector<bool> reached(m, false);
    std::vector<std::size_t> order{e};
    reached[e] = true;
    auto close = [&]() {
      for (std::size_t i = 0; i < order.size(); ++i)
        for (auto g : gens) {
          auto h = Q[order[i]][g];
          if (!reached[h]) {
            reached[h] = true;
            order.push_back(h);
          }
        }
    };
    for (std::size_t a = 0; a < m; ++a)
      if (!reached[a]) {
        gens.push_back(a);
        close();
      }
    // try all assignments of roots of unity to generators
    std::vector<std::size_t> choice(gens.size(), 0);
    for (;;) {
      std::vector<FiniteField::value_type> val(m, 0);
      std::vector<bool> set(m, false);
      val[e] = f_.one();
      set[e] = true;
      bool ok = true;
      for (std::size_t i = 0; i < order.size() && ok; ++i)
        for (std::size_t k = 0; k < gens.size() && ok; ++k) {
          const auto h = Q[order[i]][gens[k]];
          const auto v = f_.mul(val[order[i]], mu[choice[k]]);
          if (!set[h]) {
            set[h] = true;
            val[h] = v;
          } else if (val[h] != v) {
            ok = false;
          }
        }
      for (std::size_t a = 0; a < m && ok; ++a)
        for (std::size_t b = 0; b < m && ok; ++b)
          if (f_.mul(val[a], val[b]) != val[Q[a][b]]) ok = false;
      if (ok) {
        Character chi;
        chi.values = val;
        chi.trivial = true;
        for (auto v : val) chi.trivial = chi.trivial && f_.is_one(v);
        chars_.push_back(std::move(chi));
      }
      std::size_t k = 0;
      while (k < choice.size() && ++choice[k] == mu.size()) choice[k++] = 0;
      if (k == choice.size()) break;
    }
    if (chars_.size() != m)
      throw DomainError(f_.name() + " lacks the roots of unity needed to split the group algebra; enlarge the field");
    std::stable_partition(chars_.begin(), chars_.end(), [](const Character& x) { return x.trivial; });
    for (std::size_t i = 0; i < chars_.size(); ++i) chars_[i].label = chars_[i].trivial ? "k" : "S" + std::to_string(i);
  }

  /// e <- 3e^2 - 2e^3 from the character idempotent of k[G/P] lifted along
  /// coset representatives.
  GFVec lift_idempotent(const Character& chi) const {
    const auto& G = *G_;
    const std::size_t m = G.quotient_order();
    const auto inv_m = f_.inv(f_.from_int(static_cast<long long>(m)));
    GFVec e(dim(), f_.zero());
    for (std::size_t a = 0; a < m; ++a) {
      const auto r = G.coset_representatives()[a];
      e[r] = f_.mul(inv_m, f_.inv(chi.values[a]));
    }
    for (std::size_t it = 0; it <= 2 * dim() + 2; ++it) {
      const auto e2 = multiply(e, e);
      if (e2 == e) return e;
      const auto e3 = multiply(e2, e);
      GFVec next(dim());
      const auto three = f_.from_int(3), two = f_.from_int(2);
      for (std::size_t g = 0; g < dim(); ++g) next[g] = f_.sub(f_.mul(three, e2[g]), f_.mul(two, e3[g]));
      e = std::move(next);
    }
    throw Error("idempotent lifting did not converge");
  }

  std::shared_ptr<const GroupTable> G_;
  GF f_;
  GroupModule regular_;
  std::vector<Character> chars_;
  std::vector<GFVec> idempotents_;
};

/// P -> M with P a sum of PIMs, one per head summand.
struct ProjectiveCover {
  GroupModule P;
  /// dim M x dim P.
  GFMatrix map;
  /// PIM multiplicities, indexed like the characters.
  std::vector<std::size_t> multiplicities;
  bool surjective = false;
  /// ker(P -> M) is contained in rad P.
  bool minimal = false;
};

/// Composition-factor multiplicities of the head M / rad M.
inline std::vector<std::size_t> head_multiplicities(const GroupAlgebra& A, const GroupModule& M) {
  const auto& f = A.field();
  const auto radM = M.augmentation_image(A.group().sylow());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < A.characters().size(); ++i) {
    std::vector<GFVec> span = radM;
    for (std::size_t j = 0; j < M.dim(); ++j) span.push_back(M.act(A.idempotent(i), lin::unit(f, M.dim(), j)));
    out.push_back(lin::rank_of(f, M.dim(), span) - radM.size());
  }
  return out;
}

inline ProjectiveCover projective_cover(const GroupAlgebra& A, const GroupModule& M) {
  const auto& f = A.field();
  const auto& G = A.group_ptr();
  const auto radM = M.augmentation_image(A.group().sylow());
  std::vector<GroupModule> pims;
  std::vector<std::vector<GFVec>> pim_bases;
  for (std::size_t i = 0; i < A.characters().size(); ++i) {
    pim_bases.push_back(A.pim_basis(i));
    pims.push_back(A.regular().submodule(pim_bases.back()));
  }
  std::vector<const GroupModule*> parts;
  std::vector<std::vector<GFVec>> columns;  // images of the basis of each part
  std::vector<std::size_t> mult(A.characters().size(), 0);
  std::vector<GFVec> current = radM;
  for (std::size_t i = 0; i < A.characters().size(); ++i) {
    for (std::size_t j = 0; j < M.dim(); ++j) {
      const GFVec m = M.act(A.idempotent(i), lin::unit(f, M.dim(), j));
      if (lin::contains(f, M.dim(), current, m)) continue;
      current.push_back(m);
      ++mult[i];
      parts.push_back(&pims[i]);
      std::vector<GFVec> imgs;
      for (const auto& b : pim_bases[i]) imgs.push_back(M.act(b, m));
      columns.push_back(std::move(imgs));
    }
  }
  GroupModule P = parts.empty() ? GroupModule(G, f, std::vector<GFMatrix>(G->order(), GFMatrix(f, 0, 0)))
                                : direct_sum(parts, G, f);
  GFMatrix map(f, M.dim(), P.dim());
  std::size_t col = 0;
  for (const auto& block : columns)
    for (const auto& v : block) {
      for (std::size_t r = 0; r < M.dim(); ++r) map.at(r, col) = v[r];
      ++col;
    }
  ProjectiveCover pc{std::move(P), std::move(map), std::move(mult)};
  pc.surjective = M.dim() == 0 || (pc.P.dim() > 0 && rank(pc.map) == M.dim());
  if (pc.P.dim() == 0) {
    pc.minimal = true;
  } else {
    const auto ker = kernel_basis(pc.map);
    const auto radP = pc.P.augmentation_image(A.group().sylow());
    pc.minimal = true;
    for (const auto& v : ker) pc.minimal = pc.minimal && lin::contains(f, pc.P.dim(), radP, v);
  }
  return pc;
}

/// Module maps Y -> k as row vectors phi with phi (g - 1) = 0 for all g.
inline std::vector<GFVec> hom_to_trivial(const GroupModule& Y) {
  const auto& f = Y.field();
  const std::size_t m = Y.dim();
  if (m == 0) return {};
  const std::size_t n = Y.group().order();
  GFMatrix K(f, m * n, m);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        // row (g, j) of (A_g - 1)^T
        K.at(g * m + j, i) = f.sub(Y.action(g).at(i, j), i == j ? f.one() : f.zero());
  return kernel_basis(K);
}

/// X = U^0 X, U^(i+1) X = intersection of the kernels of all maps U^i X -> k.
struct CoradicalTower {
  /// dims of the chain, starting with dim X.
  std::vector<std::size_t> dims;
  /// Basis of the limit M_inf in X coordinates.
  std::vector<GFVec> limit;
  /// Hom(M_inf, k) = 0.
  bool hom_vanishes = false;
  /// Each layer U^i / U^(i+1) has trivial action.
  bool layers_trivial = true;
};

inline CoradicalTower k_coradical_tower(const GroupModule& X) {
  const auto& f = X.field();
  const std::size_t m = X.dim();
  CoradicalTower t;
  std::vector<GFVec> cur;
  for (std::size_t j = 0; j < m; ++j) cur.push_back(lin::unit(f, m, j));
  t.dims.push_back(m);
  for (std::size_t step = 0; step <= m; ++step) {
    if (cur.empty()) break;
    const GroupModule Y = X.submodule(cur);
    const auto hom = hom_to_trivial(Y);
    if (hom.empty()) break;
    GFMatrix H(f, hom.size(), Y.dim());
    for (std::size_t r = 0; r < hom.size(); ++r)
      for (std::size_t c = 0; c < Y.dim(); ++c) H.at(r, c) = hom[r][c];
    std::vector<GFVec> next;
    for (const auto& y : kernel_basis(H)) {
      GFVec v(m, f.zero());
      for (std::size_t c = 0; c < y.size(); ++c)
        for (std::size_t i = 0; i < m; ++i) v[i] = f.add(v[i], f.mul(y[c], cur[c][i]));
      next.push_back(v);
    }
    // the layer cur / next must be a trivial module
    for (std::size_t g = 0; g < X.group().order(); ++g)
      for (const auto& v : cur) {
        auto w = X.action(g) * v;
        for (std::size_t i = 0; i < m; ++i) w[i] = f.sub(w[i], v[i]);
        if (!lin::contains(f, m, next, w)) t.layers_trivial = false;
      }
    cur = std::move(next);
    t.dims.push_back(cur.size());
  }
  t.limit = cur;
  t.hom_vanishes = cur.empty() || hom_to_trivial(X.submodule(cur)).empty();
  return t;
}

}  // namespace gwb
