#include <gtest/gtest.h>

#include "gwb/graded/presentation.hpp"
#include "gwb/graded/resolution.hpp"
#include "oracles.hpp"

using namespace gwb;

namespace {

FiniteField F2() { return FiniteField(FieldSpec::prime(2)); }

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

RingPresentation<FiniteField> poly_f2(std::size_t r) {
  std::vector<Variable> v;
  for (std::size_t i = 1; i <= r; ++i) v.push_back({"x" + std::to_string(i), 1});
  return make_ring(F2(), v, {});
}

std::vector<std::size_t> residue_betti(const RingPresentation<FiniteField>& R, std::size_t h, long N = 24) {
  MinimalResolution<FiniteField> res(R.ring, residue_field<FiniteField>(R.ring), {N, h, 0});
  EXPECT_TRUE(res.is_minimal());
  EXPECT_TRUE(res.is_complex());
  EXPECT_TRUE(res.is_exact());
  EXPECT_TRUE(res.euler_mismatches().empty());
  return res.betti_totals();
}

}  // namespace

TEST(DegreewiseDim, PolynomialRingMonomialCount) {
  for (std::size_t r = 1; r <= 4; ++r) {
    auto R = poly_f2(r);
    for (long n = 0; n <= 10; ++n) EXPECT_EQ(R.ring->dim(n), binomial(static_cast<std::size_t>(n) + r - 1, r - 1));
  }
}

TEST(DegreewiseDim, SemidihedralAtTwo) {
  auto R = make_ring(F2(), {{"x", 1}, {"y", 1}, {"z", 3}, {"t", 4}}, {"x*y", "x^3", "x*z", "z^2+t*y^2"});
  EXPECT_EQ(R.ring->dim(2), 2u);
  EXPECT_EQ(parse_series("1/((1-t)^2*(1+t^2))").expand(2, 2).coeffs[0], 2);
}

TEST(DegreewiseDim, RationalSpaceAtFour) {
  auto R = make_ring(Rationals{}, {{"u", 2}, {"v", 2}, {"p", 5}}, {"u^2", "u*v", "u*p", "p^2"});
  EXPECT_EQ(R.ring->dim(4), 1u);
  std::vector<std::size_t> want{1, 0, 2, 0, 1, 1, 1, 1, 1};
  EXPECT_EQ(hilbert_prefix(*R.ring, 8), want);
}

TEST(HilbertPrefix, Dihedral) {
  auto R = make_ring(F2(), {{"x", 1}, {"y", 1}, {"z", 2}}, {"x*y"});
  EXPECT_TRUE(compare_series(hilbert_prefix(*R.ring, 12), parse_series("1/(1-t)^2")));
}

TEST(HilbertPrefix, Quaternion) {
  auto R = make_ring(F2(), {{"x", 1}, {"y", 1}, {"z", 4}}, {"x^3", "x^2+x*y+y^2", "y^3"});
  EXPECT_TRUE(compare_series(hilbert_prefix(*R.ring, 12), parse_series("(1+2*t+2*t^2+t^3)/(1-t^4)")));
  EXPECT_FALSE(compare_series(hilbert_prefix(*R.ring, 12), parse_series("1/(1-t)^2")));
}

TEST(HilbertPrefix, OneVariable) {
  auto R = make_ring(F2(), {{"x", 1}}, {});
  EXPECT_TRUE(compare_series(hilbert_prefix(*R.ring, 12), parse_series("1/(1-t)")));
}

TEST(GradedCommutativity, OddVariablesAnticommuteInOddCharacteristic) {
  auto R = make_ring(FiniteField(FieldSpec::prime(3)), {{"a", 1}, {"b", 1}}, {});
  // exterior algebra: 1, 2, 1, 0
  EXPECT_EQ(hilbert_prefix(*R.ring, 3), (std::vector<std::size_t>{1, 2, 1, 0}));
  auto ab = R.parse("a*b"), ba = R.parse("b*a");
  EXPECT_EQ(ab, -ba);
  auto C = make_ring(FiniteField(FieldSpec::prime(3)), {{"a", 1}, {"b", 1}}, {}, true);
  EXPECT_EQ(hilbert_prefix(*C.ring, 3), (std::vector<std::size_t>{1, 2, 3, 4}));
}

TEST(Construction, RejectsNonHomogeneousRelation) {
  EXPECT_THROW(make_ring(F2(), {{"x", 1}, {"y", 1}}, {"x+y^2"}), InputError);
}

TEST(Construction, RejectsUnknownIdentifier) {
  EXPECT_THROW(make_ring(F2(), {{"x", 1}}, {"x*w"}), ParseError);
}

TEST(MinimalResolution, ResidueOverDualNumbers) {
  auto R = make_ring(F2(), {{"x", 1}}, {"x^2"});
  EXPECT_EQ(residue_betti(R, 6), (std::vector<std::size_t>{1, 1, 1, 1, 1, 1, 1}));
}

TEST(MinimalResolution, KoszulResolutionOverPlane) {
  auto b = residue_betti(poly_f2(2), 5);
  EXPECT_EQ(b, (std::vector<std::size_t>{1, 2, 1, 0, 0, 0}));
}

TEST(MinimalResolution, CompleteIntersectionAgainstOracle) {
  auto R = make_ring(F2(), {{"x", 1}, {"y", 1}}, {"x^2", "y^2"});
  auto b = residue_betti(R, 6);
  oracle::MonomialAlgebra A{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
  EXPECT_EQ(b, oracle::residue_betti(A, 6));
  for (std::size_t i = 0; i <= 6; ++i) EXPECT_EQ(b[i], i + 1);
}

TEST(MinimalResolution, ZeroSquareMaximalIdealAgainstOracle) {
  auto R = make_ring(F2(), {{"x", 1}, {"y", 1}}, {"x^2", "x*y", "y^2"});
  auto b = residue_betti(R, 7);
  oracle::MonomialAlgebra A{{{0, 0}, {1, 0}, {0, 1}}};
  EXPECT_EQ(b, oracle::residue_betti(A, 7));
  for (std::size_t i = 0; i <= 7; ++i) EXPECT_EQ(b[i], std::size_t{1} << i);
}

TEST(MinimalResolution, GradedBettiAndStability) {
  auto R = make_ring(F2(), {{"x", 1}, {"y", 1}}, {"x^2", "y^2"});
  auto k = residue_field<FiniteField>(R.ring);
  MinimalResolution<FiniteField> small(R.ring, k, {10, 6, 0});
  MinimalResolution<FiniteField> large(R.ring, k, {16, 6, 0});
  for (std::size_t i = 0; i <= 6; ++i)
    for (long j = 0; j <= 10; ++j) EXPECT_EQ(small.betti(i, j), large.betti(i, j));
  // linear resolution: everything in codegree i
  EXPECT_EQ(large.betti(3, 3), 4u);
}

TEST(MinimalResolution, PresentedModule) {
  auto S = make_ring(F2(), {{"x", 1}, {"y", 1}}, {});
  // S/(x, y^2): resolution 1, 2, 1
  auto M = make_module(S, {0}, {{"x"}, {"y^2"}});
  MinimalResolution<FiniteField> res(S.ring, M, {12, 4, 0});
  EXPECT_EQ(res.betti_totals(), (std::vector<std::size_t>{1, 2, 1, 0, 0}));
  EXPECT_EQ(res.betti(2, 3), 1u);
  EXPECT_TRUE(res.is_exact());
}

TEST(MinimalResolution, ClippingIsFlagged) {
  auto R = make_ring(F2(), {{"x", 1}, {"y", 1}}, {"x^2", "y^2"});
  MinimalResolution<FiniteField> res(R.ring, residue_field<FiniteField>(R.ring), {5, 8, 0});
  ASSERT_TRUE(res.first_clipped_stage().has_value());
  EXPECT_LE(*res.first_clipped_stage(), 5u);
}

TEST(GrowthClass, Examples) {
  using K = GrowthClass::Kind;
  EXPECT_EQ(ext_growth_class(residue_betti(make_ring(F2(), {{"x", 1}}, {}), 12)).kind, K::finite);
  EXPECT_EQ(ext_growth_class(residue_betti(make_ring(F2(), {{"x", 1}}, {"x^2"}), 12)).kind, K::bounded);
  auto ci = ext_growth_class(residue_betti(make_ring(F2(), {{"x", 1}, {"y", 1}}, {"x^2", "y^2"}), 12));
  EXPECT_EQ(ci.kind, K::polynomial);
  EXPECT_EQ(ci.degree, 1);
  EXPECT_EQ(ext_growth_class(residue_betti(make_ring(F2(), {{"x", 1}, {"y", 1}}, {"x^2", "x*y", "y^2"}), 12)).kind,
            K::exponential);
}

TEST(GrowthClass, EventuallyPeriodicIsBounded) {
  EXPECT_EQ(ext_growth_class({1, 3, 2, 4, 2, 4, 2, 4, 2, 4, 2, 4}).kind, GrowthClass::Kind::bounded);
  EXPECT_EQ(ext_growth_class({1, 2, 3}).kind, GrowthClass::Kind::inconclusive);
}
