#include <gtest/gtest.h>

#include "laumon/characters.hpp"
#include "laumon/errors.hpp"

namespace laumon {
namespace {

using Rows = std::vector<std::vector<int>>;
using sym::Exponents;
using sym::LaurentPoly;
using sym::RatFunc;

mpz_class dimension(const Character& c) { return c.sum_of_coeffs(); }

TEST(HomChar, Sections) {
  VermaRing ring(3);
  EXPECT_EQ(hom_char(ring, 2, 1, 2, 1), ring.poly(ring.one()));
  EXPECT_EQ(hom_char(ring, 1, 1, 0, 2),
            ring.poly(ring.weight(2, 1, 0)) + ring.poly(ring.weight(2, 1, 2)));
  EXPECT_TRUE(hom_char(ring, 0, 1, 1, 2).is_zero());
}

TEST(Tangent, PointAndSmallCases) {
  VermaRing r2(2);
  EXPECT_TRUE(tangent_char(r2, FixedPoint::zero(2)).is_zero());
  EXPECT_TRUE(flag_tangent_oracle(r2, flag_of(FixedPoint::zero(2))).is_zero());

  FixedPoint one(2, Rows{{1}});
  Character c = flag_tangent_oracle(r2, flag_of(one));
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(dimension(c), 2);
  EXPECT_EQ(tangent_char(r2, one), c);

  VermaRing r3(3);
  FixedPoint p(3, Rows{{1}, {0, 0}});
  EXPECT_EQ(dimension(tangent_char(r3, p)), 2);
  EXPECT_EQ(tangent_char(r3, p), flag_tangent_oracle(r3, flag_of(p)));
}

TEST(Tangent, OracleEquivalenceAndDimension) {
  for (int n = 2; n <= 4; ++n) {
    VermaRing ring(n);
    for (const auto& d : degrees_up_to(n, 4)) {
      for (const auto& p : enumerate(n, d)) {
        Character c = tangent_char(ring, p);
        EXPECT_EQ(c, flag_tangent_oracle(ring, flag_of(p)));
        EXPECT_EQ(dimension(c), 2 * degree_total(d));
        EXPECT_EQ(c.coeff(ring.one()), 0);
        for (const auto& t : c.terms()) EXPECT_GT(t.coeff, 0);
        for (int i = 1; i < n; ++i) {
          for (const auto& up : raise(p, i)) {
            Character cc = corr_tangent_char(ring, p, up.point);
            EXPECT_EQ(cc, flag_tangent_oracle(ring, correspondence_flag(p, up.point)));
            EXPECT_EQ(dimension(cc), 2 * degree_total(d) + 1);
            EXPECT_EQ(cc.coeff(ring.one()), 0);
          }
        }
      }
    }
  }
}

TEST(Correspondence, RankTwoFromZero) {
  VermaRing ring(2);
  Character c = corr_tangent_char(ring, FixedPoint::zero(2), FixedPoint(2, Rows{{1}}));
  EXPECT_EQ(dimension(c), 1);
}

TEST(Correspondence, NonAdjacentIsUsageError) {
  VermaRing ring(2);
  EXPECT_THROW(corr_tangent_char(ring, FixedPoint::zero(2), FixedPoint(2, Rows{{2}})), UsageError);
  EXPECT_THROW(corr_line_weight(ring, FixedPoint::zero(2), FixedPoint(2, Rows{{2}})), UsageError);
}

TEST(LineWeight, Examples) {
  VermaRing r2(2);
  EXPECT_EQ(corr_line_weight(r2, FixedPoint::zero(2), FixedPoint(2, Rows{{1}})), r2.t(1, 2));
  EXPECT_EQ(corr_line_weight(r2, FixedPoint(2, Rows{{1}}), FixedPoint(2, Rows{{2}})),
            r2.t(1, 2) + r2.v(-2));
  VermaRing r3(3);
  EXPECT_EQ(corr_line_weight(r3, FixedPoint(3, Rows{{1}, {0, 1}}), FixedPoint(3, Rows{{1}, {1, 1}})),
            r3.t(1, 2));
}

TEST(SymInverse, Examples) {
  VermaRing ring(2);
  LaurentPoly zero(ring.nvars());
  EXPECT_TRUE(eq_exact(sym_inverse(zero), ring.constant(1)));
  EXPECT_TRUE(eq_exact(sym_inverse(ring.poly(ring.v(2))), RatFunc::one_minus_inverse(ring.v(2))));

  RatFunc s = sym_inverse(tangent_char(ring, FixedPoint(2, Rows{{1}})));
  mpq_class x = eval(s, ring.point({2, 3}, 5));
  EXPECT_NE(x, 0);
}

TEST(SymInverse, Errors) {
  VermaRing ring(2);
  EXPECT_THROW(sym_inverse(-ring.poly(ring.v(2))), UsageError);
  EXPECT_THROW(sym_inverse(ring.poly(ring.one())), DegeneracyError);
}

TEST(SymInverse, OrientationBUsesDualWeights) {
  VermaRing ring(2);
  Character c = ring.poly(ring.t(1, 2));
  EXPECT_TRUE(eq_exact(sym_inverse(c, Orientation::B), sym_inverse(c.dual())));
  EXPECT_EQ(parse_orientation("B"), Orientation::B);
  EXPECT_THROW(parse_orientation("C"), UsageError);
}

TEST(DetRGamma, AnchorAndCocycle) {
  for (int n = 2; n <= 4; ++n) {
    VermaRing ring(n);
    Exponents anchor = ring.one();
    for (int j = 1; j < n; ++j) anchor += ring.t(j, 2 * (n - j));
    EXPECT_EQ(det_rgamma_weight(ring, FixedPoint::zero(n)), anchor);
    for (const auto& d : degrees_up_to(n, 4))
      for (const auto& p : enumerate(n, d))
        for (int i = 1; i < n; ++i)
          for (const auto& up : raise(p, i))
            EXPECT_EQ(det_rgamma_weight(ring, p) - det_rgamma_weight(ring, up.point),
                      corr_line_weight(ring, p, up.point));
  }
}

TEST(Flag, MalformedIsUsageError) {
  FlagData f{2, {{{1, 0}}, {{1, 1}, {2, 0}}}};
  EXPECT_THROW(validate_flag(f), UsageError);
  VermaRing ring(2);
  EXPECT_THROW(flag_tangent_oracle(ring, f), UsageError);
}

}  // namespace
}  // namespace laumon
