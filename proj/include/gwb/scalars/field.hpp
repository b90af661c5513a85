#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "gwb/error.hpp"

namespace gwb {

/// Description of a coefficient field: QQ, F_p, or F_{p^k} = F_p[u]/(m(u)).
struct FieldSpec {
  enum class Kind { rationals, prime, extension };

  Kind kind = Kind::rationals;
  std::uint64_t p = 0;
  unsigned degree = 1;
  /// Ascending coefficients of the monic minimal polynomial (size degree + 1).
  /// Empty means "use the built-in polynomial".
  std::vector<std::uint64_t> min_poly;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint64_t p) { return {Kind::prime, p, 1, {}}; }
  static FieldSpec extension(std::uint64_t p, unsigned k, std::vector<std::uint64_t> m = {}) {
    if (k == 1 && m.empty()) return prime(p);
    return {Kind::extension, p, k, std::move(m)};
  }
  /// char = 0 means QQ; field_degree k >= 1.
  static FieldSpec from_char(std::uint64_t characteristic, unsigned k = 1) {
    if (characteristic == 0) {
      if (k != 1) throw InputError("characteristic 0 admits only field_degree 1");
      return rationals();
    }
    return extension(characteristic, k);
  }

  std::uint64_t characteristic() const { return kind == Kind::rationals ? 0 : p; }
};

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on signed 128-bit to stay clear of overflow
  __int128 t = 0, new_t = 1, r = static_cast<__int128>(p), new_r = static_cast<__int128>(a % p);
  while (new_r != 0) {
    __int128 quotient = r / new_r;
    __int128 tmp = t - quotient * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quotient * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw DomainError("element is not invertible");
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

// Remainder of a (ascending coefficients) modulo monic m over F_p.
inline std::vector<std::uint64_t> poly_mod(std::vector<std::uint64_t> a,
                                           const std::vector<std::uint64_t>& m, std::uint64_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    std::uint64_t lead = a.back() % p;
    std::size_t shift = a.size() - 1 - dm;
    if (lead != 0)
      for (std::size_t i = 0; i <= dm; ++i)
        a[shift + i] = (a[shift + i] + p - mul_mod(lead, m[i], p)) % p;
    a.pop_back();
  }
  return a;
}

/// True iff the monic polynomial m (degree <= 4) has no factor of degree 1 or 2.
inline bool irreducible_small(const std::vector<std::uint64_t>& m, std::uint64_t p) {
  const std::size_t deg = m.size() - 1;
  if (deg <= 1) return deg == 1;
  if (deg > 5) throw DomainError("irreducibility test supports degree <= 5");
  auto divides = [&](const std::vector<std::uint64_t>& g) {
    auto r = poly_mod(m, g, p);
    for (auto c : r)
      if (c % p != 0) return false;
    return true;
  };
  for (std::uint64_t a = 0; a < p; ++a)
    if (divides({a, 1})) return false;
  if (deg >= 4)
    for (std::uint64_t a = 0; a < p; ++a)
      for (std::uint64_t b = 0; b < p; ++b)
        if (divides({a, b, 1})) return false;
  return true;
}

/// Conway polynomials for the small cases, falling back to the
/// lexicographically first irreducible monic polynomial.
inline std::vector<std::uint64_t> default_min_poly(std::uint64_t p, unsigned k) {
  struct Known {
    std::uint64_t p;
    unsigned k;
    std::vector<std::uint64_t> coeffs;
  };
  static const Known table[] = {
      {2, 2, {1, 1, 1}},       {2, 3, {1, 1, 0, 1}},    {2, 4, {1, 1, 0, 0, 1}},
      {3, 2, {2, 2, 1}},       {3, 3, {1, 2, 0, 1}},    {3, 4, {2, 0, 0, 2, 1}},
      {5, 2, {2, 4, 1}},       {5, 3, {3, 3, 0, 1}},    {5, 4, {2, 4, 4, 0, 1}},
      {7, 2, {3, 6, 1}},       {7, 3, {4, 0, 6, 1}},    {7, 4, {3, 4, 5, 0, 1}},
  };
  for (const auto& e : table)
    if (e.p == p && e.k == k) return e.coeffs;
  std::vector<std::uint64_t> m(k + 1, 0);
  m[k] = 1;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < k; ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 0; i < k; ++i) {
      m[i] = c % p;
      c /= p;
    }
    if (m[0] != 0 && irreducible_small(m, p)) return m;
  }
  throw DomainError("no irreducible polynomial found");
}

}  // namespace detail

/// The rational numbers with GMP arbitrary-precision arithmetic.
class Rationals {
 public:
  using value_type = mpq_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return mpq_class(static_cast<long>(v)); }
  value_type from_rational(const mpq_class& v) const { return v; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw DomainError("division by zero");
    return 1 / a;
  }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  bool contains(const value_type&) const { return true; }

  std::uint64_t characteristic() const { return 0; }
  std::uint64_t size() const { return 0; }
  FieldSpec spec() const { return FieldSpec::rationals(); }
  std::string name() const { return "QQ"; }
  std::string format(const value_type& a) const { return a.get_str(); }

  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

/// F_q for q = p^k. Elements are integers in [0, q) whose base-p digits
/// are the coefficients of a polynomial in the generator u.
class FiniteField {
 public:
  using value_type = std::uint64_t;

  explicit FiniteField(const FieldSpec& spec) {
    if (spec.kind == FieldSpec::Kind::rationals) throw InputError("FiniteField needs p > 0");
    if (!detail::is_prime(spec.p)) throw DomainError("characteristic " + std::to_string(spec.p) + " is not prime");
    if (spec.p >= (std::uint64_t{1} << 32)) throw DomainError("characteristic too large");
    p_ = spec.p;
    k_ = spec.degree;
    if (k_ < 1 || k_ > 4) throw DomainError("extension degree must lie in 1..4");
    if (k_ > 1) {
      min_poly_ = spec.min_poly.empty() ? detail::default_min_poly(p_, k_) : spec.min_poly;
      if (min_poly_.size() != k_ + 1 || min_poly_.back() != 1)
        throw InputError("minimal polynomial must be monic of degree " + std::to_string(k_));
      for (auto c : min_poly_)
        if (c >= p_) throw InputError("minimal polynomial coefficient out of range");
      if (!detail::irreducible_small(min_poly_, p_)) throw DomainError("minimal polynomial is reducible over F_p");
    }
    q_ = 1;
    for (unsigned i = 0; i < k_; ++i) q_ *= p_;
    if (k_ > 1 && q_ > (std::uint64_t{1} << 31)) throw DomainError("field too large");
    if (k_ > 1 && q_ <= 256) build_tables();
  }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<value_type>(r);
  }
  value_type from_rational(const mpq_class& v) const {
    mpz_class num = v.get_num() % mpz_class(std::to_string(p_));
    mpz_class den = v.get_den() % mpz_class(std::to_string(p_));
    if (den == 0) throw DomainError("rational coefficient has denominator divisible by p");
    if (num < 0) num += mpz_class(std::to_string(p_));
    return mul(static_cast<value_type>(num.get_ui()), inv(static_cast<value_type>(den.get_ui())));
  }

  value_type add(value_type a, value_type b) const {
    if (k_ == 1) {
      value_type s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (tables_) return tables_->add[a * q_ + b];
    value_type r = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
      r += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return r;
  }
  value_type neg(value_type a) const {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    if (tables_) return tables_->neg[a];
    value_type r = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
      value_type d = a % p_;
      r += (d == 0 ? 0 : p_ - d) * scale;
      a /= p_;
      scale *= p_;
    }
    return r;
  }
  value_type sub(value_type a, value_type b) const { return add(a, neg(b)); }
  value_type mul(value_type a, value_type b) const {
    if (k_ == 1) return detail::mul_mod(a, b, p_);
    if (tables_) return tables_->mul[a * q_ + b];
    return slow_mul(a, b);
  }
  value_type inv(value_type a) const {
    if (a == 0) throw DomainError("division by zero");
    if (k_ == 1) return detail::inv_mod(a, p_);
    if (tables_) return tables_->inv[a];
    return pow(a, q_ - 2);
  }
  value_type pow(value_type a, std::uint64_t e) const {
    value_type r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }
  bool contains(value_type a) const { return a < q_; }

  /// The generator u of F_q over F_p (u itself when k > 1).
  value_type generator() const { return k_ == 1 ? 1 : p_; }

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint64_t size() const { return q_; }
  const std::vector<std::uint64_t>& min_poly() const { return min_poly_; }
  FieldSpec spec() const {
    return k_ == 1 ? FieldSpec::prime(p_) : FieldSpec::extension(p_, k_, min_poly_);
  }
  std::string name() const { return "F_" + std::to_string(q_); }
  std::string format(value_type a) const {
    if (k_ == 1) return std::to_string(a);
    // polynomial in u, e.g. "u+1"
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(k_) - 1; i >= 0; --i) {
      value_type scale = 1;
      for (int j = 0; j < i; ++j) scale *= p_;
      value_type d = (a / scale) % p_;
      if (d == 0) continue;
      if (!first) os << '+';
      first = false;
      if (i == 0 || d != 1) os << d;
      if (i > 0) os << (i == 0 || d != 1 ? "*u" : "u");
      if (i > 1) os << '^' << i;
    }
    if (first) os << '0';
    return os.str();
  }

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.min_poly_ == b.min_poly_;
  }

 private:
  struct Tables {
    std::vector<value_type> add, mul, neg, inv;
  };

  value_type slow_add(value_type a, value_type b) const {
    value_type r = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
      r += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return r;
  }

  value_type slow_mul(value_type a, value_type b) const {
    std::vector<std::uint64_t> da(k_), db(k_), prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
      da[i] = a % p_;
      a /= p_;
      db[i] = b % p_;
      b /= p_;
    }
    for (unsigned i = 0; i < k_; ++i)
      for (unsigned j = 0; j < k_; ++j)
        prod[i + j] = (prod[i + j] + detail::mul_mod(da[i], db[j], p_)) % p_;
    auto red = detail::poly_mod(prod, min_poly_, p_);
    value_type r = 0, scale = 1;
    for (unsigned i = 0; i < red.size(); ++i) {
      r += red[i] * scale;
      scale *= p_;
    }
    return r;
  }

  void build_tables() {
    auto t = std::make_shared<Tables>();
    t->add.resize(q_ * q_);
    t->mul.resize(q_ * q_);
    t->neg.resize(q_);
    t->inv.resize(q_, 0);
    for (value_type a = 0; a < q_; ++a)
      for (value_type b = 0; b < q_; ++b) {
        t->add[a * q_ + b] = slow_add(a, b);
        t->mul[a * q_ + b] = slow_mul(a, b);
      }
    for (value_type a = 0; a < q_; ++a) {
      for (value_type b = 0; b < q_; ++b) {
        if (t->add[a * q_ + b] == 0) t->neg[a] = b;
        if (t->mul[a * q_ + b] == 1) t->inv[a] = b;
      }
    }
    tables_ = std::move(t);
  }

  std::uint64_t p_ = 2, q_ = 2;
  unsigned k_ = 1;
  std::vector<std::uint64_t> min_poly_;
  std::shared_ptr<const Tables> tables_;
};

template <class F>
concept ExactField = requires(const F& f, const typename F::value_type& a, long long n, const mpq_class& q) {
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.from_int(n) } -> std::same_as<typename F::value_type>;
  { f.from_rational(q) } -> std::same_as<typename F::value_type>;
  { f.add(a, a) } -> std::same_as<typename F::value_type>;
  { f.sub(a, a) } -> std::same_as<typename F::value_type>;
  { f.mul(a, a) } -> std::same_as<typename F::value_type>;
  { f.neg(a) } -> std::same_as<typename F::value_type>;
  { f.inv(a) } -> std::same_as<typename F::value_type>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.characteristic() } -> std::same_as<std::uint64_t>;
  { f.format(a) } -> std::same_as<std::string>;
  { f == f } -> std::same_as<bool>;
};

static_assert(ExactField<Rationals>);
static_assert(ExactField<FiniteField>);

using AnyField = std::variant<Rationals, FiniteField>;

inline AnyField make_field(const FieldSpec& spec) {
  if (spec.kind == FieldSpec::Kind::rationals) return Rationals{};
  return FiniteField(spec);
}

template <ExactField F>
typename F::value_type power(const F& f, typename F::value_type a, long long e) {
  if (e < 0) {
    a = f.inv(a);
    e = -e;
  }
  typename F::value_type r = f.one();
  while (e) {
    if (e & 1) r = f.mul(r, a);
    a = f.mul(a, a);
    e >>= 1;
  }
  return r;
}

}  // namespace gwb
