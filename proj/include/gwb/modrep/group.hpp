#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "gwb/error.hpp"

namespace gwb {

/// A finite group by its multiplication table, with the normal Sylow
/// p-subgroup it is studied with.
class GroupTable {
 public:
  GroupTable(std::vector<std::vector<std::size_t>> table, std::uint64_t p, std::vector<std::size_t> sylow = {})
      : table_(std::move(table)), p_(p) {
    const std::size_t n = table_.size();
    if (n == 0) throw InputError("a group needs at least one element");
    for (const auto& row : table_) {
      if (row.size() != n) throw InputError("multiplication table must be square");
      for (auto v : row)
        if (v >= n) throw InputError("multiplication table entry out of range");
    }
    identity_ = n;
    for (std::size_t e = 0; e < n && identity_ == n; ++e) {
      bool ok = true;
      for (std::size_t g = 0; g < n && ok; ++g) ok = table_[e][g] == g && table_[g][e] == g;
      if (ok) identity_ = e;
    }
    if (identity_ == n) throw InputError("multiplication table has no identity");
    inverse_.assign(n, n);
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h)
        if (table_[g][h] == identity_ && table_[h][g] == identity_) inverse_[g] = h;
    for (std::size_t g = 0; g < n; ++g)
      if (inverse_[g] == n) throw InputError("element " + std::to_string(g) + " has no inverse");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw InputError("multiplication table is not associative");
    set_sylow(std::move(sylow));
  }

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  std::uint64_t prime() const { return p_; }
  const std::vector<std::size_t>& sylow() const { return sylow_; }
  bool in_sylow(std::size_t g) const { return in_sylow_[g]; }
  bool is_p_group() const { return sylow_.size() == order(); }

  std::size_t element_order(std::size_t g) const {
    std::size_t k = 1, x = g;
    while (x != identity_) {
      x = mul(x, g);
      ++k;
    }
    return k;
  }

  /// Coset index of gP for each g; cosets numbered by first appearance.
  const std::vector<std::size_t>& coset_of() const { return coset_; }
  std::size_t quotient_order() const { return coset_reps_.size(); }
  const std::vector<std::size_t>& coset_representatives() const { return coset_reps_; }

 private:
  void set_sylow(std::vector<std::size_t> given) {
    const std::size_t n = order();
    if (p_ < 2) throw InputError("the characteristic must be a prime");
    // a normal Sylow p-subgroup consists of exactly the p-elements
    std::vector<std::size_t> pel;
    for (std::size_t g = 0; g < n; ++g) {
      std::size_t k = element_order(g);
      while (k % p_ == 0) k /= p_;
      if (k == 1) pel.push_back(g);
    }
    std::size_t pn = 1, rest = n;
    while (rest % p_ == 0) {
      rest /= p_;
      pn *= p_;
    }
    if (pel.size() != pn) throw DomainError("the group has no normal Sylow " + std::to_string(p_) + "-subgroup");
    for (auto a : pel)
      for (auto b : pel)
        if (!std::binary_search(pel.begin(), pel.end(), mul(a, b)))
          throw DomainError("the group has no normal Sylow " + std::to_string(p_) + "-subgroup");
    if (!given.empty()) {
      std::sort(given.begin(), given.end());
      given.erase(std::unique(given.begin(), given.end()), given.end());
      if (given != pel) throw InputError("the declared Sylow subgroup is not the normal Sylow " + std::to_string(p_) + "-subgroup");
    }
    sylow_ = pel;
    in_sylow_.assign(n, false);
    for (auto g : sylow_) in_sylow_[g] = true;
    coset_.assign(n, n);
    for (std::size_t g = 0; g < n; ++g) {
      if (coset_[g] != n) continue;
      const std::size_t c = coset_reps_.size();
      coset_reps_.push_back(g);
      for (auto h : sylow_) coset_[mul(g, h)] = c;
    }
  }

  std::vector<std::vector<std::size_t>> table_;
  std::uint64_t p_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> sylow_;
  std::vector<bool> in_sylow_;
  std::vector<std::size_t> coset_;
  std::vector<std::size_t> coset_reps_;
};

using Permutation = std::vector<std::size_t>;

/// The group generated by permutations, elements in breadth-first order from
/// the identity (words in the generators, shortest first).
inline GroupTable permutation_group(const std::vector<Permutation>& gens, std::uint64_t p) {
  if (gens.empty()) throw InputError("at least one generator is required");
  const std::size_t d = gens[0].size();
  Permutation id(d);
  std::iota(id.begin(), id.end(), 0);
  auto compose = [](const Permutation& a, const Permutation& b) {
    Permutation c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
  };
  std::vector<Permutation> elems{id};
  std::map<Permutation, std::size_t> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      auto h = compose(g, elems[i]);
      if (index.emplace(h, elems.size()).second) elems.push_back(h);
    }
  std::vector<std::vector<std::size_t>> table(elems.size(), std::vector<std::size_t>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  return GroupTable(std::move(table), p);
}

/// Quaternion group: elements (s, u) = (-1)^s u with u in {1, i, j, k}.
inline GroupTable quaternion_group() {
  // unit products: sign and result in {0:1, 1:i, 2:j, 3:k}
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int s = (a / 4 + b / 4 + sign[a % 4][b % 4]) % 2;
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = static_cast<std::size_t>(4 * s + unit[a % 4][b % 4]);
    }
  return GroupTable(std::move(t), 2);
}

/// Built-in groups: c2, c4, v4, q8, d8, a4 (p = 2) and c3c3c2 = (C3)^2 : C2
/// (p = 3, the inverting action).
inline GroupTable builtin_group(const std::string& name) {
  if (name == "c2") return permutation_group({{1, 0}}, 2);
  if (name == "c4") return permutation_group({{1, 2, 3, 0}}, 2);
  if (name == "v4") return permutation_group({{1, 0, 3, 2}, {2, 3, 0, 1}}, 2);
  if (name == "d8") return permutation_group({{1, 2, 3, 0}, {0, 3, 2, 1}}, 2);
  if (name == "q8") return quaternion_group();
  if (name == "a4") return permutation_group({{1, 2, 0, 3}, {1, 0, 3, 2}}, 2);
  if (name == "c3c3c2") {
    // affine maps v -> +-v + b on (Z/3)^2, points indexed 3x + y
    auto perm = [](int sx, int bx, int by) {
      Permutation q(9);
      for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
          const int nx = ((sx * x + bx) % 3 + 3) % 3, ny = ((sx * y + by) % 3 + 3) % 3;
          q[static_cast<std::size_t>(3 * x + y)] = static_cast<std::size_t>(3 * nx + ny);
        }
      return q;
    };
    return permutation_group({perm(1, 1, 0), perm(1, 0, 1), perm(-1, 0, 0)}, 3);
  }
  throw InputError("unknown group '" + name + "' (known: c2, c4, v4, q8, d8, a4, c3c3c2)");
}

inline std::vector<std::string> builtin_group_names() { return {"c2", "c4", "v4", "q8", "d8", "a4", "c3c3c2"}; }

}  // namespace gwb
