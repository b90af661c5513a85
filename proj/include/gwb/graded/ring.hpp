#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "gwb/error.hpp"
#include "gwb/scalars/field.hpp"

namespace gwb {

inline constexpr std::size_t kMaxVars = 12;

/// Exponent vector; unused slots stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
  bool is_one() const {
    for (auto v : e)
      if (v) return false;
    return true;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : m.e) h = (h ^ v) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

struct Variable {
  std::string name;
  long codegree = 1;
};

/// The free graded-commutative algebra k[x_1, ..., x_m] with x_i in codegree
/// d_i >= 1. In odd characteristic, odd-codegree variables anticommute and
/// square to zero unless the ring is declared strictly commutative.
template <ExactField F>
class PolyRing {
 public:
  using V = typename F::value_type;

  PolyRing(F field, std::vector<Variable> vars, bool strictly_commutative = false)
      : field_(std::move(field)), vars_(std::move(vars)), commutative_(strictly_commutative) {
    if (vars_.size() > kMaxVars) throw InputError("at most " + std::to_string(kMaxVars) + " variables are supported");
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i].codegree < 1) throw InputError("variable " + vars_[i].name + " must have positive codegree");
      for (std::size_t j = 0; j < i; ++j)
        if (vars_[j].name == vars_[i].name) throw InputError("duplicate variable name " + vars_[i].name);
    }
  }

  const F& field() const { return field_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<Variable>& vars() const { return vars_; }
  const Variable& var(std::size_t i) const { return vars_[i]; }
  bool strictly_commutative() const { return commutative_; }

  std::optional<std::size_t> find_var(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].name == name) return i;
    return std::nullopt;
  }

  /// True when x_i anticommutes with other odd variables and squares to zero.
  bool is_odd(std::size_t i) const {
    return !commutative_ && field_.characteristic() != 2 && vars_[i].codegree % 2 != 0;
  }

  long codegree(const Monomial& m) const {
    long d = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) d += m.e[i] * vars_[i].codegree;
    return d;
  }

  /// Sign of a*b relative to the sorted monomial, or 0 when it vanishes.
  int product_sign(const Monomial& a, const Monomial& b) const {
    int parity = 0;
    for (std::size_t j = 0; j < vars_.size(); ++j) {
      if (!is_odd(j) || !a.e[j]) continue;
      if (b.e[j]) return 0;
      for (std::size_t i = 0; i < j; ++i)
        if (is_odd(i) && b.e[i]) parity ^= 1;
    }
    return parity ? -1 : 1;
  }

  Monomial product(const Monomial& a, const Monomial& b) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    return r;
  }

  Monomial variable(std::size_t i) const {
    Monomial m;
    m.e[i] = 1;
    return m;
  }

  /// Monomials of codegree n, lexicographically descending (index 0 largest).
  const std::vector<Monomial>& monomials(long n) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    return table(n).list;
  }

  std::size_t count(long n) const { return monomials(n).size(); }

  /// Index of m within monomials(codegree(m)), or -1.
  long index_of(const Monomial& m) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    const auto& t = table(codegree(m));
    auto it = t.index.find(m);
    return it == t.index.end() ? -1 : static_cast<long>(it->second);
  }

  std::string format_monomial(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (!m.e[i]) continue;
      if (!s.empty()) s += "*";
      s += vars_[i].name;
      if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
  }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    if (!(a.field_ == b.field_) || a.commutative_ != b.commutative_ || a.vars_.size() != b.vars_.size()) return false;
    for (std::size_t i = 0; i < a.vars_.size(); ++i)
      if (a.vars_[i].name != b.vars_[i].name || a.vars_[i].codegree != b.vars_[i].codegree) return false;
    return true;
  }

 private:
  struct Table {
    std::vector<Monomial> list;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  };
  struct Cache {
    std::mutex mutex;
    std::map<long, Table> tables;
  };

  const Table& table(long n) const {
    auto it = cache_->tables.find(n);
    if (it != cache_->tables.end()) return it->second;
    Table t;
    if (n >= 0) {
      Monomial cur;
      enumerate(0, n, cur, t.list);
    }
    for (std::size_t i = 0; i < t.list.size(); ++i) t.index.emplace(t.list[i], i);
    return cache_->tables.emplace(n, std::move(t)).first->second;
  }

  // lexicographically descending: larger exponents of earlier variables first
  void enumerate(std::size_t var, long remaining, Monomial& cur, std::vector<Monomial>& out) const {
    if (var == vars_.size()) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    long max_e = remaining / vars_[var].codegree;
    if (is_odd(var)) max_e = std::min<long>(max_e, 1);
    for (long e = max_e; e >= 0; --e) {
      cur.e[var] = static_cast<std::uint16_t>(e);
      enumerate(var + 1, remaining - e * vars_[var].codegree, cur, out);
    }
    cur.e[var] = 0;
  }

  F field_;
  std::vector<Variable> vars_;
  bool commutative_ = false;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Polynomial as a sparse map from monomials to nonzero coefficients.
template <ExactField F>
class Poly {
 public:
  using V = typename F::value_type;

  Poly() = default;
  explicit Poly(std::shared_ptr<const PolyRing<F>> ring) : ring_(std::move(ring)) {}

  static Poly constant(std::shared_ptr<const PolyRing<F>> ring, const V& c) {
    Poly p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_[Monomial{}] = c;
    return p;
  }
  static Poly variable(std::shared_ptr<const PolyRing<F>> ring, std::size_t i) {
    Poly p(ring);
    p.terms_[ring->variable(i)] = ring->field().one();
    return p;
  }
  static Poly monomial(std::shared_ptr<const PolyRing<F>> ring, const Monomial& m, const V& c) {
    Poly p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_[m] = c;
    return p;
  }

  const PolyRing<F>& ring() const { return *ring_; }
  const std::shared_ptr<const PolyRing<F>>& ring_ptr() const { return ring_; }
  const F& field() const { return ring_->field(); }
  const std::map<Monomial, V>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Common codegree of all terms; nullopt when not homogeneous or zero.
  std::optional<long> homogeneous_codegree() const {
    std::optional<long> d;
    for (const auto& [m, c] : terms_) {
      long k = ring_->codegree(m);
      if (d && *d != k) return std::nullopt;
      d = k;
    }
    return d;
  }
  bool is_homogeneous() const { return is_zero() || homogeneous_codegree().has_value(); }

  /// Coefficient of the constant monomial.
  V constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? field().zero() : it->second;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    const auto& f = a.field();
    for (const auto& [m, c] : b.terms_) {
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) {
        r.terms_.emplace(m, c);
      } else {
        it->second = f.add(it->second, c);
        if (f.is_zero(it->second)) r.terms_.erase(it);
      }
    }
    return r;
  }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& [m, c] : r.terms_) c = a.field().neg(c);
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.ring_);
    const auto& f = a.field();
    const auto& R = *a.ring_;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        int s = R.product_sign(ma, mb);
        if (s == 0) continue;
        auto c = f.mul(ca, cb);
        if (s < 0) c = f.neg(c);
        Monomial m = R.product(ma, mb);
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
          if (!f.is_zero(c)) r.terms_.emplace(m, c);
        } else {
          it->second = f.add(it->second, c);
          if (f.is_zero(it->second)) r.terms_.erase(it);
        }
      }
    return r;
  }
  Poly scaled(const V& s) const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) {
      auto v = field().mul(s, c);
      if (!field().is_zero(v)) r.terms_.emplace(m, v);
    }
    return r;
  }
  Poly pow(long e) const {
    if (e < 0) throw InputError("negative exponent in a polynomial");
    Poly r = constant(ring_, field().one());
    for (long k = 0; k < e; ++k) r = r * *this;
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    // descending monomial order reads naturally, e.g. "x^2 + 3*y*z"
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      bool negative = false;
      V shown = c;
      if constexpr (std::is_same_v<F, Rationals>) {
        negative = sgn(c) < 0;
        if (negative) shown = -c;
      }
      std::string cs = field().format(shown);
      std::string ms = ring_->format_monomial(m);
      std::string term;
      if (m.is_one())
        term = cs;
      else if (field().is_one(shown))
        term = ms;
      else
        term = (cs.find('+') != std::string::npos ? "(" + cs + ")" : cs) + "*" + ms;
      if (s.empty())
        s = negative ? "-" + term : term;
      else
        s += (negative ? " - " : " + ") + term;
    }
    return s;
  }

 private:
  std::shared_ptr<const PolyRing<F>> ring_;
  std::map<Monomial, V> terms_;
};

}  // namespace gwb
