#pragma once

#include <string>
#include <vector>

#include "gwb/hilbert/series.hpp"
#include "gwb/localcoh/cech.hpp"

namespace gwb {

struct CheckReport {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(std::string msg) {
    ok = false;
    violations.push_back(std::move(msg));
  }
};

/// H^i = 0 for i > r and for i < e, H^e != 0, on the window of the table.
inline CheckReport grothendieck_vanishing_check(const CohomologyTable& T, std::size_t dim_r, std::size_t depth_e) {
  CheckReport rep;
  for (std::size_t i = 0; i < T.indices(); ++i) {
    if (i <= dim_r && i >= depth_e) continue;
    for (long n : T.support(i))
      rep.fail("H^" + std::to_string(i) + " is nonzero at codegree " + std::to_string(n) +
               (i > dim_r ? " above the dimension" : " below the depth"));
  }
  if (T.row_is_zero(depth_e)) rep.fail("H^" + std::to_string(depth_e) + " vanishes on the window");
  return rep;
}

struct RadicalInvarianceResult {
  bool equal = false;
  CohomologyTable first;
  CohomologyTable second;
};

/// Compares the tables for two ideals assumed to have the same radical.
template <ExactField F>
RadicalInvarianceResult radical_invariance_check(ModulePtr<F> M, std::vector<Poly<F>> I, std::vector<Poly<F>> J,
                                                 const CechOptions& opt = {}) {
  RadicalInvarianceResult r;
  r.first = local_cohomology_cech(M, std::move(I), opt);
  r.second = local_cohomology_cech(M, std::move(J), opt);
  const std::size_t m = std::max(r.first.indices(), r.second.indices());
  r.equal = r.first.all_exact() && r.second.all_exact();
  for (std::size_t i = 0; i < m && r.equal; ++i)
    for (long n = opt.n_min; n <= opt.n_max; ++n)
      if (r.first.dim(i, n) != r.second.dim(i, n)) r.equal = false;
  return r;
}

struct GorensteinReport {
  CheckReport concentration;  // H^i = 0 for i != r
  CheckReport dual;           // dim H^r(n) = dim R^(-n-a-r)
  CheckReport euler;          // sum (-1)^i dim H^i(n) = coefficient at infinity
  bool ok = false;
};

/// Local cohomology of R against the shifted dual of R. CM rings must pass
/// all three parts; otherwise only the alternating sum is required.
template <ExactField F>
GorensteinReport gorenstein_duality_check(const GradedModule<F>& R, const CohomologyTable& T, std::size_t r, long a,
                                          const Series& p, bool expect_cm) {
  GorensteinReport rep;
  for (std::size_t i = 0; i < T.indices(); ++i) {
    if (i == r) continue;
    for (long n : T.support(i)) rep.concentration.fail("H^" + std::to_string(i) + " nonzero at codegree " + std::to_string(n));
  }
  const long rr = static_cast<long>(r);
  for (long n = T.n_min; n <= T.n_max; ++n) {
    const std::size_t want = R.dim(-n - a - rr);
    if (T.dim(r, n) != want)
      rep.dual.fail("codegree " + std::to_string(n) + ": H^" + std::to_string(r) + " has dim " + std::to_string(T.dim(r, n)) +
                    ", dual predicts " + std::to_string(want));
  }
  const auto inf = p.expand_at_infinity(T.n_min, T.n_max);
  for (long n = T.n_min; n <= T.n_max; ++n) {
    long chi = 0;
    for (std::size_t i = 0; i < T.indices(); ++i) chi += (i % 2 ? -1 : 1) * static_cast<long>(T.dim(i, n));
    const mpq_class& want = inf[static_cast<std::size_t>(n - T.n_min)];
    if (mpq_class(chi) != want)
      rep.euler.fail("codegree " + std::to_string(n) + ": alternating sum " + std::to_string(chi) + ", series predicts " + want.get_str());
  }
  if (!T.all_exact()) rep.euler.fail("table has uncertified cells");
  rep.ok = rep.euler.ok && (!expect_cm || (rep.concentration.ok && rep.dual.ok));
  return rep;
}

}  // namespace gwb
