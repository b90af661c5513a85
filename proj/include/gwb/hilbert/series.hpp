#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "gwb/error.hpp"
#include "gwb/hilbert/poly.hpp"

namespace gwb {

/// Rational function t^e * N(t) / D(t) over QQ, kept in the normal form
/// N(0) != 0 (or N = 0), D(0) = 1, gcd(N, D) = 1. Equality is structural.
class Series {
 public:
  Series() : den_(QPoly::constant(1)) {}
  Series(const QPoly& num, const QPoly& den, long shift = 0) : num_(num), den_(den), shift_(shift) { normalize(); }

  static Series constant(const mpq_class& c) { return Series(QPoly::constant(c), QPoly::constant(1)); }
  static Series t_power(long k) { return Series(QPoly::constant(1), QPoly::constant(1), k); }
  static Series from_coeffs(const std::vector<mpq_class>& c, long shift = 0) {
    return Series(QPoly(c), QPoly::constant(1), shift);
  }

  const QPoly& numerator() const { return num_; }
  const QPoly& denominator() const { return den_; }
  long shift() const { return shift_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent_polynomial() const { return den_.degree() == 0; }

  friend Series operator+(const Series& a, const Series& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const long m = std::min(a.shift_, b.shift_);
    QPoly n = (a.num_ * b.den_).shift_up(static_cast<std::size_t>(a.shift_ - m)) +
              (b.num_ * a.den_).shift_up(static_cast<std::size_t>(b.shift_ - m));
    return Series(n, a.den_ * b.den_, m);
  }
  friend Series operator-(const Series& a) { return Series(-a.num_, a.den_, a.shift_); }
  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
  friend Series operator*(const Series& a, const Series& b) {
    return Series(a.num_ * b.num_, a.den_ * b.den_, a.shift_ + b.shift_);
  }
  Series inverse() const {
    if (is_zero()) throw DomainError("division by the zero series");
    return Series(den_, num_, -shift_);
  }
  friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }
  Series pow(long e) const {
    Series base = e < 0 ? inverse() : *this;
    Series r = constant(1);
    for (long k = e < 0 ? -e : e; k > 0; --k) r = r * base;
    return r;
  }
  friend bool operator==(const Series& a, const Series& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// The rational function p(1/t).
  Series substitute_inverse() const {
    if (is_zero()) return *this;
    return Series(num_.reversed(), den_.reversed(), -shift_ - num_.degree() + den_.degree());
  }

  /// Value at a rational point; nullopt at a pole (or at 0 when the shift is negative).
  std::optional<mpq_class> eval(const mpq_class& x) const {
    mpq_class d = den_.eval(x);
    if (sgn(d) == 0) return std::nullopt;
    if (sgn(x) == 0 && shift_ < 0) return std::nullopt;
    mpq_class v = num_.eval(x) / d;
    mpq_class xp = 1;
    for (long k = 0; k < (shift_ < 0 ? -shift_ : shift_); ++k) xp *= x;
    if (shift_ < 0) return mpq_class(v / xp);
    return mpq_class(v * xp);
  }

  /// Lowest exponent with a nonzero coefficient (the shift; 0 for zero).
  long valuation() const { return shift_; }

  struct Expansion {
    long n_min = 0;
    std::vector<mpq_class> coeffs;
    /// True when the window starts below the valuation (those entries are 0).
    bool below_valuation = false;
  };

  /// Exact Laurent coefficients of t^n for n in [n_min, n_max].
  Expansion expand(long n_min, long n_max) const {
    Expansion out;
    out.n_min = n_min;
    out.below_valuation = !is_zero() && n_min < shift_;
    if (n_max < n_min) return out;
    out.coeffs.assign(static_cast<std::size_t>(n_max - n_min + 1), 0);
    if (is_zero() || n_max < shift_) return out;
    // power series N/D by long division; D(0) = 1
    const long top = n_max - shift_;
    std::vector<mpq_class> c(static_cast<std::size_t>(top + 1), 0);
    for (long k = 0; k <= top; ++k) {
      mpq_class v = num_.coeff(static_cast<std::size_t>(k));
      for (long j = 1; j <= den_.degree() && j <= k; ++j) v -= den_.coeff(static_cast<std::size_t>(j)) * c[static_cast<std::size_t>(k - j)];
      c[static_cast<std::size_t>(k)] = v;
    }
    for (long n = std::max(n_min, shift_); n <= n_max; ++n)
      out.coeffs[static_cast<std::size_t>(n - n_min)] = c[static_cast<std::size_t>(n - shift_)];
    return out;
  }

  /// Coefficients of t^n, n in [n_min, n_max], of the expansion in powers of 1/t.
  std::vector<mpq_class> expand_at_infinity(long n_min, long n_max) const {
    std::vector<mpq_class> out;
    if (n_max < n_min) return out;
    const auto e = substitute_inverse().expand(-n_max, -n_min);
    for (long n = n_min; n <= n_max; ++n) out.push_back(e.coeffs[static_cast<std::size_t>(-n + n_max)]);
    return out;
  }

  /// Canonical form: expanded numerator and denominator, ascending exponents.
  std::string to_string() const {
    std::string n = format_laurent(num_, shift_);
    if (den_.degree() == 0) return n;
    if (num_.degree() > 0) n = "(" + n + ")";
    return n + "/(" + format_laurent(den_) + ")";
  }

  /// Denominator written as a product of cyclotomic factors when possible,
  /// e.g. "t^2/((1-t)*(1+t^2))". Falls back to the compact expanded form.
  std::string to_factored_string() const;

 private:
  void normalize() {
    if (den_.is_zero()) throw DomainError("zero denominator");
    if (num_.is_zero()) {
      den_ = QPoly::constant(1);
      shift_ = 0;
      return;
    }
    const auto vn = num_.valuation(), vd = den_.valuation();
    num_ = num_.shift_down(vn);
    den_ = den_.shift_down(vd);
    shift_ += static_cast<long>(vn) - static_cast<long>(vd);
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = QPoly::divmod(num_, g).first;
      den_ = QPoly::divmod(den_, g).first;
    }
    mpq_class c = den_.coeff(0);
    if (c != 1) {
      num_ = (1 / c) * num_;
      den_ = (1 / c) * den_;
    }
  }

  QPoly num_;
  QPoly den_;
  long shift_ = 0;
};

namespace detail {

/// Cyclotomic polynomial Phi_n with integer coefficients.
inline QPoly cyclotomic(long n) {
  std::vector<mpq_class> c(static_cast<std::size_t>(n + 1), 0);
  c[0] = -1;
  c[static_cast<std::size_t>(n)] = 1;
  QPoly p(c);
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = QPoly::divmod(p, cyclotomic(d)).first;
  return p;
}

}  // namespace detail

inline std::string Series::to_factored_string() const {
  std::string num = format_laurent(num_, shift_, true);
  if (den_.degree() == 0) return num;
  if (num_.degree() > 0) num = "(" + num + ")";
  QPoly rest = den_;
  std::vector<std::string> factors;
  // phi(n) >= sqrt(n/2), so no cyclotomic factor of degree <= deg D has n > 2 deg^2
  const long bound = 2 * den_.degree() * den_.degree() + 2;
  for (long n = 1; rest.degree() > 0 && n <= bound; ++n) {
    QPoly phi = detail::cyclotomic(n);
    int mult = 0;
    for (;;) {
      auto [q, r] = QPoly::divmod(rest, phi);
      if (!r.is_zero()) break;
      rest = q;
      ++mult;
    }
    if (mult == 0) continue;
    // write Phi_1 as 1-t so every factor has constant term 1
    QPoly shown = n == 1 ? -phi : phi;
    std::string f = "(" + format_laurent(shown, 0, true) + ")";
    if (mult > 1) f += "^" + std::to_string(mult);
    factors.push_back(f);
  }
  if (rest.degree() > 0) return num + "/(" + format_laurent(den_, 0, true) + ")";
  std::string den;
  for (std::size_t i = 0; i < factors.size(); ++i) den += (i ? "*" : "") + factors[i];
  if (factors.size() == 1 && den.find('^') == std::string::npos) return num + "/" + den;
  return num + "/(" + den + ")";
}

}  // namespace gwb
