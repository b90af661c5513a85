#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "gwb/error.hpp"

namespace gwb {

/// Univariate polynomial over QQ, ascending coefficients, no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::vector<mpq_class> c) : c_(std::move(c)) { trim(); }
  static QPoly constant(const mpq_class& v) { return QPoly(std::vector<mpq_class>{v}); }
  static QPoly monomial(const mpq_class& v, std::size_t k) {
    std::vector<mpq_class> c(k + 1, 0);
    c[k] = v;
    return QPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  mpq_class coeff(std::size_t k) const { return k < c_.size() ? c_[k] : mpq_class(0); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class lead() const { return c_.empty() ? mpq_class(0) : c_.back(); }

  /// Largest k with t^k dividing this (0 for the zero polynomial).
  std::size_t valuation() const {
    std::size_t k = 0;
    while (k < c_.size() && sgn(c_[k]) == 0) ++k;
    return c_.empty() ? 0 : k;
  }
  QPoly shift_down(std::size_t k) const {
    if (k >= c_.size()) return {};
    return QPoly(std::vector<mpq_class>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
  }
  QPoly shift_up(std::size_t k) const {
    if (c_.empty()) return {};
    std::vector<mpq_class> c(k, 0);
    c.insert(c.end(), c_.begin(), c_.end());
    return QPoly(std::move(c));
  }
  /// t^deg * p(1/t).
  QPoly reversed() const { return QPoly(std::vector<mpq_class>(c_.rbegin(), c_.rend())); }

  mpq_class eval(const mpq_class& x) const {
    mpq_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return QPoly(std::move(c));
  }
  friend QPoly operator-(const QPoly& a) {
    auto c = a.c_;
    for (auto& v : c) v = -v;
    return QPoly(std::move(c));
  }
  friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return QPoly(std::move(c));
  }
  friend QPoly operator*(const mpq_class& s, const QPoly& a) { return QPoly::constant(s) * a; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; b must be nonzero.
  static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<mpq_class> r = a.c_;
    const std::size_t db = b.c_.size() - 1;
    if (r.size() <= db) return {QPoly(), a};
    std::vector<mpq_class> q(r.size() - db, 0);
    for (std::size_t k = r.size(); k-- > db;) {
      if (sgn(r[k]) == 0) continue;
      mpq_class f = r[k] / b.c_.back();
      q[k - db] = f;
      for (std::size_t i = 0; i <= db; ++i) r[k - db + i] -= f * b.c_[i];
    }
    r.resize(db);
    return {QPoly(std::move(q)), QPoly(std::move(r))};
  }

  /// Monic gcd (zero only if both are zero).
  static QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (1 / a.lead()) * a;
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<mpq_class> c_;
};

namespace detail {

inline std::string format_term(const mpq_class& abs_coeff, long exponent, const std::string& var) {
  std::string mono;
  if (exponent == 1)
    mono = var;
  else if (exponent != 0)
    mono = var + "^" + std::to_string(exponent);
  if (mono.empty()) return abs_coeff.get_str();
  if (abs_coeff == 1) return mono;
  return abs_coeff.get_str() + "*" + mono;
}

}  // namespace detail

/// Prints sum c_k t^(k + offset) with ascending exponents, e.g. "1 - t + t^2".
inline std::string format_laurent(const QPoly& p, long offset = 0, bool compact = false, const std::string& var = "t") {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  const std::string plus = compact ? "+" : " + ", minus = compact ? "-" : " - ";
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const auto& c = p.coeffs()[k];
    if (sgn(c) == 0) continue;
    mpq_class a = abs(c);
    if (first)
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? minus : plus;
    out += detail::format_term(a, static_cast<long>(k) + offset, var);
    first = false;
  }
  return out;
}

}  // namespace gwb
