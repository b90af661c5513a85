#include <gtest/gtest.h>

#include "gwb/graded/presentation.hpp"
#include "gwb/localcoh/checks.hpp"
#include "gwb/localcoh/duality.hpp"
#include "gwb/localcoh/koszul.hpp"

using namespace gwb;

namespace {

FiniteField F2() { return FiniteField(FieldSpec::prime(2)); }

using RP2 = RingPresentation<FiniteField>;

std::vector<Poly<FiniteField>> polys(const RP2& R, std::vector<std::string> s) {
  std::vector<Poly<FiniteField>> out;
  for (auto& x : s) out.push_back(R.parse(x));
  return out;
}

CechOptions window(long lo, long hi) { return {lo, hi, 16}; }

// H^2 of the Cech complex of k[x,y] for (x,y), one Z^2-degree at a time: the
// complex k -> k_x + k_y -> k_xy restricted to x^a y^b has a term k[x,y] iff
// a,b >= 0, k[x,1/x][y] iff b >= 0, k[x][y,1/y] iff a >= 0, and always the last.
std::size_t oracle_h2(long n) {
  std::size_t total = 0;
  for (long a = n - 50; a <= 50; ++a) {
    const long b = n - a;
    const int c1 = (b >= 0) + (a >= 0);
    // d^1 : C^1 -> C^2 is (1, -1) on whichever summands exist; rank = min(c1, 1)
    const int rank1 = c1 > 0 ? 1 : 0;
    total += static_cast<std::size_t>(1 - rank1);
  }
  return total;
}

}  // namespace

TEST(Koszul, RegularPairOnPlane) {
  auto R = make_ring(F2(), {{"x", 1}, {"y", 1}}, {});
  KoszulComplex<FiniteField> K(R.ring, polys(R, {"x", "y"}));
  auto h = koszul_homology(K, 0, 8);
  for (long n = 0; n <= 8; ++n) {
    EXPECT_EQ(h[0][static_cast<std::size_t>(n)], n == 0 ? 1u : 0u);
    EXPECT_EQ(h[1][static_cast<std::size_t>(n)], 0u);
    EXPECT_EQ(h[2][static_cast<std::size_t>(n)], 0u);
    EXPECT_TRUE(K.is_complex_at(n));
  }
  EXPECT_EQ(is_regular_sequence(K, 8), Verdict::yes);
}

TEST(Koszul, ZeroDivisor) {
  auto R = make_ring(F2(), {{"x", 1}}, {"x^2"});
  KoszulComplex<FiniteField> K(R.ring, polys(R, {"x"}));
  EXPECT_EQ(K.homology(1, 2), 1u);
  EXPECT_EQ(K.homology(1, 1), 0u);
  EXPECT_EQ(is_regular_sequence(K, 6), Verdict::no);
}

TEST(Koszul, SquareAndVariable) {
  auto R = make_ring(F2(), {{"x", 1}, {"y", 1}}, {});
  KoszulComplex<FiniteField> K(R.ring, polys(R, {"x^2", "y"}));
  auto h = koszul_homology(K, 0, 8);
  std::vector<std::size_t> h0{1, 1, 0, 0, 0, 0, 0, 0, 0};
  EXPECT_EQ(h[0], h0);
  for (long n = 0; n <= 8; ++n) {
    EXPECT_EQ(h[1][static_cast<std::size_t>(n)], 0u);
    EXPECT_EQ(h[2][static_cast<std::size_t>(n)], 0u);
  }
}

TEST(Koszul, ProductAndSumIsRegular) {
  auto R = make_ring(F2(), {{"x", 1}, {"y", 1}}, {});
  KoszulComplex<FiniteField> K(R.ring, polys(R, {"x*y", "x+y"}));
  // k[x,y]/(xy, x+y) = k[x]/(x^2); with H_2 = 0 in a domain the Euler
  // characteristic of the complex forces H_1 = 0.
  for (long n = 0; n <= 10; ++n) {
    const long chi = static_cast<long>(K.dim(0, n)) - static_cast<long>(K.dim(1, n)) + static_cast<long>(K.dim(2, n));
    EXPECT_EQ(chi, n <= 1 ? 1 : 0);
    EXPECT_EQ(K.homology(1, n), 0u);
  }
  EXPECT_EQ(is_regular_sequence(K, 10), Verdict::yes);
  EXPECT_EQ(is_regular_sequence(K, 1), Verdict::inconclusive);
}

TEST(Koszul, RejectsBadIdeals) {
  auto R = make_ring(F2(), {{"x", 1}, {"y", 1}}, {});
  EXPECT_THROW(KoszulComplex<FiniteField>(R.ring, {}), InputError);
  EXPECT_THROW(KoszulComplex<FiniteField>(R.ring, {R.parse("x + y^2", false)}), InputError);
  auto Q = make_ring(Rationals{}, {{"a", 1}, {"b", 3}}, {});
  EXPECT_THROW(KoszulComplex<Rationals>(Q.ring, {Q.parse("a"), Q.parse("b")}), DomainError);
}

TEST(Cech, LineHasTopCohomologyBelowZero) {
  auto R = make_ring(F2(), {{"x", 1}}, {});
  auto T = local_cohomology_cech<FiniteField>(R.ring, polys(R, {"x"}), window(-10, 6));
  EXPECT_TRUE(T.all_exact());
  EXPECT_TRUE(T.row_is_zero(0));
  for (long n = -10; n <= 6; ++n) EXPECT_EQ(T.dim(1, n), n <= -1 ? 1u : 0u) << n;
}

TEST(Cech, RationalSpaceTorsion) {
  auto R = make_ring(Rationals{}, {{"u", 2}, {"v", 2}, {"p", 5}}, {"u^2", "u*v", "u*p", "p^2"});
  auto T = local_cohomology_cech<Rationals>(R.ring, {R.parse("v")}, window(-12, 12));
  EXPECT_TRUE(T.all_exact());
  EXPECT_EQ(T.support(0), std::vector<long>{2});
  EXPECT_EQ(T.dim(0, 2), 1u);
}

TEST(Cech, PlaneAgainstMonomialOracle) {
  auto R = make_ring(F2(), {{"x", 1}, {"y", 1}}, {});
  auto T = local_cohomology_cech<FiniteField>(R.ring, polys(R, {"x", "y"}), window(-8, 4));
  EXPECT_TRUE(T.all_exact());
  EXPECT_TRUE(T.row_is_zero(0));
  EXPECT_TRUE(T.row_is_zero(1));
  for (long n = -8; n <= 4; ++n) EXPECT_EQ(T.dim(2, n), oracle_h2(n)) << n;
  EXPECT_EQ(T.dim(2, -2), 1u);
  EXPECT_EQ(T.dim(2, -3), 2u);
  EXPECT_EQ(T.dim(2, -4), 3u);
}

TEST(Cech, ComplexProperty) {
  auto R = make_ring(F2(), {{"x", 1}, {"y", 1}, {"z", 2}}, {"x*y"});
  CechComplex<FiniteField> C(R.ring, polys(R, {"x+y", "z"}));
  const auto& f = R.field();
  for (long s = 1; s <= 3; ++s)
    for (long n = -6; n <= 4; ++n)
      EXPECT_TRUE(is_zero_matrix(compose(f, C.differential(1, s, n), C.differential(0, s, n))));
}

TEST(Cech, StabilizationNeverRevisesExactCells) {
  auto R = make_ring(F2(), {{"x", 1}, {"y", 1}}, {"x*y"});
  auto small = local_cohomology_cech<FiniteField>(R.ring, polys(R, {"x", "y"}), {-6, 4, 6});
  auto large = local_cohomology_cech<FiniteField>(R.ring, polys(R, {"x", "y"}), {-6, 4, 16});
  for (std::size_t i = 0; i < small.indices(); ++i)
    for (long n = -6; n <= 4; ++n)
      if (small.flag(i, n) == CellFlag::exact) EXPECT_EQ(small.dim(i, n), large.dim(i, n));
}

TEST(Cech, UncertifiedWhenBoundTooSmall) {
  auto R = make_ring(F2(), {{"x", 1}}, {});
  auto T = local_cohomology_cech<FiniteField>(R.ring, polys(R, {"x"}), {-3, 0, 1});
  EXPECT_FALSE(T.all_exact());
  EXPECT_EQ(T.flag(1, -3), CellFlag::uncertified);
}

TEST(Duality, LineMatchesCech) {
  auto R = make_ring(F2(), {{"x", 1}}, {});
  DualityMethod<FiniteField> D(R.ring, {-10, 6, 0});
  EXPECT_TRUE(D.complete());
  auto T = D.table();
  for (long n = -10; n <= 6; ++n) {
    EXPECT_EQ(T.dim(1, n), n <= -1 ? 1u : 0u);
    EXPECT_EQ(T.dim(0, n), 0u);
  }
}

TEST(Duality, ResidueFieldIsTorsion) {
  auto R = make_ring(F2(), {{"x", 1}}, {});
  auto k = make_module(R, {0}, {{"x"}});
  auto T = local_cohomology_duality<FiniteField>(k, {-5, 5, 0});
  EXPECT_EQ(T.support(0), std::vector<long>{0});
  EXPECT_TRUE(T.row_is_zero(1));
}

TEST(Duality, RejectsAnticommutingBase) {
  auto Q = make_ring(Rationals{}, {{"a", 1}}, {});
  EXPECT_THROW(DualityMethod<Rationals>(Q.ring, {}), DomainError);
}

TEST(Duality, DihedralAgreesWithCech) {
  auto R = make_ring(F2(), {{"x", 1}, {"y", 1}, {"z", 2}}, {"x*y"});
  auto P = std::make_shared<const PolyRing<FiniteField>>(F2(), std::vector<Variable>{{"w", 1}, {"z", 2}});
  auto M = std::make_shared<const RestrictedModule<FiniteField>>(R.ring, P, polys(R, {"x+y", "z"}));
  auto cech = local_cohomology_cech<FiniteField>(R.ring, polys(R, {"x+y", "z"}), window(-10, 6));
  auto dual = local_cohomology_duality<FiniteField>(M, {-10, 6, 0});
  ASSERT_TRUE(cech.all_exact());
  ASSERT_TRUE(dual.all_exact());
  for (std::size_t i = 0; i <= 2; ++i)
    for (long n = -10; n <= 6; ++n) EXPECT_EQ(cech.dim(i, n), dual.dim(i, n)) << i << " " << n;
}

TEST(Duality, SemidihedralAgreesWithCech) {
  auto R = make_ring(F2(), {{"x", 1}, {"y", 1}, {"z", 3}, {"t", 4}}, {"x*y", "x^3", "x*z", "z^2+t*y^2"});
  auto P = std::make_shared<const PolyRing<FiniteField>>(F2(), std::vector<Variable>{{"y", 1}, {"t", 4}});
  auto M = std::make_shared<const RestrictedModule<FiniteField>>(R.ring, P, polys(R, {"y", "t"}));
  auto cech = local_cohomology_cech<FiniteField>(R.ring, polys(R, {"y", "t"}), window(-10, 6));
  auto dual = local_cohomology_duality<FiniteField>(M, {-10, 6, 0});
  ASSERT_TRUE(cech.all_exact());
  ASSERT_TRUE(dual.all_exact());
  for (std::size_t i = 0; i <= 2; ++i)
    for (long n = -10; n <= 6; ++n) EXPECT_EQ(cech.dim(i, n), dual.dim(i, n)) << i << " " << n;
  EXPECT_FALSE(cech.row_is_zero(1));
  EXPECT_FALSE(cech.row_is_zero(2));
}

TEST(Vanishing, Reports) {
  auto R = make_ring(F2(), {{"x", 1}}, {});
  auto T = local_cohomology_cech<FiniteField>(R.ring, polys(R, {"x"}), window(-6, 6));
  EXPECT_TRUE(grothendieck_vanishing_check(T, 1, 1).ok);
  auto bad = grothendieck_vanishing_check(T, 0, 0);
  EXPECT_FALSE(bad.ok);
  EXPECT_FALSE(bad.violations.empty());
}

TEST(Vanishing, DihedralAndSemidihedral) {
  auto D = make_ring(F2(), {{"x", 1}, {"y", 1}, {"z", 2}}, {"x*y"});
  auto TD = local_cohomology_cech<FiniteField>(D.ring, polys(D, {"x+y", "z"}), window(-10, 6));
  EXPECT_TRUE(grothendieck_vanishing_check(TD, 2, 2).ok);
  auto S = make_ring(F2(), {{"x", 1}, {"y", 1}, {"z", 3}, {"t", 4}}, {"x*y", "x^3", "x*z", "z^2+t*y^2"});
  auto TS = local_cohomology_cech<FiniteField>(S.ring, polys(S, {"y", "t"}), window(-10, 6));
  EXPECT_TRUE(grothendieck_vanishing_check(TS, 2, 1).ok);
}

TEST(RadicalInvariance, Examples) {
  auto L = make_ring(F2(), {{"x", 1}}, {});
  EXPECT_TRUE(radical_invariance_check<FiniteField>(L.ring, polys(L, {"x"}), polys(L, {"x^2"}), window(-6, 4)).equal);
  auto A = make_ring(F2(), {{"x", 1}, {"y", 1}}, {});
  EXPECT_TRUE(radical_invariance_check<FiniteField>(A.ring, polys(A, {"x", "y"}), polys(A, {"x", "x+y"}), window(-6, 4)).equal);
  auto Q = make_ring(Rationals{}, {{"u", 2}, {"v", 2}, {"p", 5}}, {"u^2", "u*v", "u*p", "p^2"});
  auto r = radical_invariance_check<Rationals>(Q.ring, {Q.parse("v")}, {Q.parse("u"), Q.parse("v"), Q.parse("p")}, window(-12, 12));
  EXPECT_TRUE(r.equal);
}

TEST(Gorenstein, PolynomialAndDihedral) {
  auto A = make_ring(F2(), {{"x", 1}, {"y", 1}}, {});
  auto TA = local_cohomology_cech<FiniteField>(A.ring, polys(A, {"x", "y"}), window(-8, 4));
  EXPECT_TRUE(gorenstein_duality_check(*A.ring, TA, 2, 0, parse_series("1/(1-t)^2"), true).ok);
  auto D = make_ring(F2(), {{"x", 1}, {"y", 1}, {"z", 2}}, {"x*y"});
  auto TD = local_cohomology_cech<FiniteField>(D.ring, polys(D, {"x+y", "z"}), window(-10, 6));
  auto rep = gorenstein_duality_check(*D.ring, TD, 2, 0, parse_series("1/(1-t)^2"), true);
  EXPECT_TRUE(rep.ok);
  // a wrong shift is caught
  EXPECT_FALSE(gorenstein_duality_check(*D.ring, TD, 2, 1, parse_series("1/(1-t)^2"), true).ok);
}

TEST(Gorenstein, RationalSpaceBalance) {
  auto R = make_ring(Rationals{}, {{"u", 2}, {"v", 2}, {"p", 5}}, {"u^2", "u*v", "u*p", "p^2"});
  auto T = local_cohomology_cech<Rationals>(R.ring, {R.parse("v")}, window(-12, 12));
  auto rep = gorenstein_duality_check(*R.ring, T, 1, -4, parse_series("(1+t^5)/(1-t^2)+t^2"), false);
  EXPECT_TRUE(rep.ok);
  EXPECT_TRUE(rep.euler.ok);
  EXPECT_FALSE(rep.concentration.ok);
  // H^1(n) + H^0(n+1) = R^(3-n)
  for (long n = -12; n < 12; ++n) EXPECT_EQ(T.dim(1, n) + T.dim(0, n + 1), R.ring->dim(3 - n)) << n;
}
