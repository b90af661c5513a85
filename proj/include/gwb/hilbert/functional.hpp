#pragma once

#include <optional>
#include <string>

#include "gwb/hilbert/series.hpp"

namespace gwb {

/// Krull dimension r and duality shift a; t counts codegree.
struct DualityParams {
  long krull_dim = 0;
  long shift = 0;
};

inline Series signed_t_power(long sign_exponent, long t_exponent) {
  return Series::constant(sign_exponent % 2 == 0 ? 1 : -1) * Series::t_power(t_exponent);
}

/// p(1/t) == (-1)^r t^(r+a) p(t).
inline bool check_cm_functional_equation(const Series& p, const DualityParams& d) {
  return p.substitute_inverse() == signed_t_power(d.krull_dim, d.krull_dim + d.shift) * p;
}

struct AlmostCmResult {
  enum class Status { ok, not_almost_cm_shaped, second_equation_fails };
  Status status = Status::ok;
  /// Present unless the status is not_almost_cm_shaped.
  std::optional<Series> q;
  std::string message;

  bool ok() const { return status == Status::ok; }
};

/// q = (-1)^(r-1) [p(1/t) - (-1)^r t^(r+a) p(t)] / (1+t), accepted when it
/// satisfies q(1/t) = (-1)^(r-1) t^(-(r-1)-a) q(t).
inline AlmostCmResult solve_almost_cm(const Series& p, const DualityParams& d) {
  const long r = d.krull_dim, a = d.shift;
  Series bracket = p.substitute_inverse() - signed_t_power(r, r + a) * p;
  AlmostCmResult out;
  const QPoly one_plus_t(std::vector<mpq_class>{1, 1});
  auto [quot, rem] = QPoly::divmod(bracket.numerator(), one_plus_t);
  if (!rem.is_zero()) {
    out.status = AlmostCmResult::Status::not_almost_cm_shaped;
    out.message = "not almost-CM-shaped: numerator not divisible by 1+t";
    return out;
  }
  Series q = signed_t_power(r - 1, 0) * Series(quot, bracket.denominator(), bracket.shift());
  out.q = q;
  if (!(q.substitute_inverse() == signed_t_power(r - 1, -(r - 1) - a) * q)) {
    out.status = AlmostCmResult::Status::second_equation_fails;
    out.message = "q(1/t) != (-1)^(r-1) t^(-(r-1)-a) q(t)";
  }
  return out;
}

}  // namespace gwb
