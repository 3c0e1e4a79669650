#include <gtest/gtest.h>

#include "laumon/whittaker.hpp"

namespace laumon {
namespace {

using Rows = std::vector<std::vector<int>>;
using sym::RatFunc;

int fails(const std::vector<CheckRecord>& rs) {
  int c = 0;
  for (const auto& r : rs) c += r.status == Status::Fail ? 1 : 0;
  return c;
}

RatFunc one_minus_v2_inv(const VermaRing& ring) { return RatFunc::one_minus_inverse(ring.v(2)); }

TEST(Shapovalov, LowestIsOne) {
  for (int n = 2; n <= 4; ++n) {
    VermaModule m(n);
    auto x = ModuleVector::basis(FixedPoint::zero(n), m.ring().nvars());
    EXPECT_TRUE(eq_exact(shapovalov_pair(m, x, x), m.ring().constant(1)));
  }
}

TEST(Shapovalov, DistinctDegreesPairToZero) {
  VermaModule m(2);
  auto x = ModuleVector::basis(FixedPoint::zero(2), m.ring().nvars());
  auto y = ModuleVector::basis(FixedPoint(2, Rows{{1}}), m.ring().nvars());
  EXPECT_TRUE(shapovalov_pair(m, x, y).is_zero());
}

TEST(Shapovalov, SymmetricAndOrthogonal) {
  VermaModule m(3);
  auto pts = m.points({1, 1});
  ASSERT_EQ(pts.size(), 2u);
  auto a = ModuleVector::basis(pts[0], m.ring().nvars());
  auto b = ModuleVector::basis(pts[1], m.ring().nvars());
  EXPECT_TRUE(shapovalov_pair(m, a, b).is_zero());
  EXPECT_FALSE(shapovalov_pair(m, a, a).is_zero());
}

TEST(Shapovalov, AdjointnessBoxThree) {
  for (int n = 2; n <= 3; ++n) {
    VermaModule m(n);
    auto rs = shapovalov_checks(m, {n, 3});
    EXPECT_GT(rs.size(), 1u);
    EXPECT_EQ(fails(rs), 0);
  }
}

TEST(RGamma, SmallCases) {
  VermaModule m(2);
  EXPECT_TRUE(eq_exact(rgamma_char(m, structure_sheaf_vector(m, {0})), m.ring().constant(1)));
  RatFunc r = rgamma_char(m, structure_sheaf_vector(m, {1}));
  mpq_class x = eval(r, m.ring().point({2, 3}, mpq_class(1, 7)));
  EXPECT_NE(x, 0);
  auto k1 = whittaker_k(m, {1});
  EXPECT_EQ(k1.coeffs().size(), 1u);
}

TEST(Whittaker, LowestComponents) {
  VermaModule m(3);
  auto k0 = whittaker_k(m, {0, 0});
  auto w0 = whittaker_w(m, {0, 0});
  auto e = ModuleVector::basis(FixedPoint::zero(3), m.ring().nvars());
  EXPECT_TRUE(vectors_equal(k0, e));
  EXPECT_TRUE(vectors_equal(w0, e));
}

TEST(Whittaker, RankTwoEigen) {
  VermaModule m(2);
  Truncation tr{2, 2};
  auto lhs = apply(m.op_f(1), whittaker_k(m, {1}), tr);
  EXPECT_TRUE(vectors_equal(lhs, whittaker_k(m, {0}).scaled(one_minus_v2_inv(m.ring()))));
  auto lw = apply(op_e_star(m, 1), whittaker_w(m, {1}), tr);
  EXPECT_TRUE(vectors_equal(lw, whittaker_w(m, {0}).scaled(one_minus_v2_inv(m.ring()))));
}

TEST(Whittaker, RankThreeDegreeOneOne) {
  VermaModule m(3);
  Truncation tr{3, 2};
  auto k = whittaker_k(m, {1, 1});
  for (int i = 1; i <= 2; ++i) {
    Degree lower = degree_shift({1, 1}, i, -1);
    auto lhs = apply(m.op_f(i), k, tr);
    EXPECT_TRUE(vectors_equal(lhs, whittaker_k(m, lower).scaled(one_minus_v2_inv(m.ring()))));
  }
}

TEST(Whittaker, EStarTwoWays) {
  VermaModule m(3);
  auto adj = op_e_adjoint(m, 2);
  auto star = op_e_star(m, 2);
  for (const auto& p : m.points({1, 2}))
    for (const auto& a : lower(p, 2))
      EXPECT_TRUE(eq_exact(adj.entry(a.point, p), star.entry(a.point, p)));
}

TEST(Whittaker, SuitesPass) {
  for (int n = 2; n <= 3; ++n) {
    VermaModule m(n);
    EXPECT_EQ(fails(whittaker_checks(m, {n, n == 2 ? 3 : 2})), 0);
    EXPECT_EQ(fails(kw_checks(m, degrees_up_to(n, 3))), 0);
  }
}

TEST(Whittaker, PushforwardOfLine) {
  VermaModule m(3);
  const VermaRing& ring = m.ring();
  Degree d{1, 1};
  for (int i = 1; i <= 2; ++i) {
    auto lhs = pushforward_line(m, i, d);
    auto mono = ring.t(i, 2) + ring.v(2 * degree_at(d, i - 1) - 2 * degree_at(d, i));
    auto rhs = structure_sheaf_vector(m, d).scaled(ring.rat(mono) * one_minus_v2_inv(ring));
    EXPECT_TRUE(vectors_equal(lhs, rhs)) << i;
  }
}

TEST(PairKW, TwoPaths) {
  VermaModule m(2);
  auto [a, b] = pair_kw(m, {0});
  EXPECT_TRUE(eq_exact(a, m.ring().constant(1)));
  EXPECT_TRUE(eq_exact(b, m.ring().constant(1)));
  auto [c, e] = pair_kw(m, {1});
  EXPECT_TRUE(eq_exact(c, e));
}

TEST(PartialFractions, UpToFour) {
  for (int i = 1; i <= 4; ++i) EXPECT_TRUE(partial_fraction_identity(i)) << i;
}

}  // namespace
}  // namespace laumon
