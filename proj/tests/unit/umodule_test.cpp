#include <gtest/gtest.h>

#include "laumon/errors.hpp"
#include "laumon/umodule.hpp"

namespace laumon {
namespace {

using Rows = std::vector<std::vector<int>>;
using sym::RatFunc;

int count(const std::vector<CheckRecord>& rs, Status s) {
  int c = 0;
  for (const auto& r : rs) c += r.status == s ? 1 : 0;
  return c;
}

TEST(Scalars, KAndL) {
  VermaModule m3(3);
  const VermaRing& r3 = m3.ring();
  EXPECT_EQ(m3.k_scalar(1, {1, 1}), r3.t(2) + r3.t(1, -1) + r3.v(2));
  EXPECT_EQ(m3.l_scalar(1, {0, 0}), r3.t(1, -1) + r3.v(1));
  VermaModule m2(2);
  const VermaRing& r2 = m2.ring();
  EXPECT_EQ(m2.k_scalar(1, {0}), r2.t(2) + r2.t(1, -1) + r2.v(1));
  // half-integer exponent: n = 2, i = 1 gives v^{d_1 + 1/2}
  EXPECT_EQ(m2.l_scalar(1, {0}), r2.t(1, -1) + r2.v_half(1));
}

TEST(Scalars, IndexOutOfRange) {
  VermaModule m(3);
  EXPECT_THROW(m.op_K(0), UsageError);
  EXPECT_THROW(m.op_E(3), UsageError);
}

TEST(Sevostyanov, Matrix) {
  for (int n = 3; n <= 5; ++n) {
    for (int i = 1; i < n - 1; ++i) {
      EXPECT_EQ(sevostyanov_c(n, i, i + 1), -1);
      EXPECT_EQ(sevostyanov_c(n, i + 1, i), 1);
    }
    EXPECT_EQ(sevostyanov_c(n, 1, 1), 0);
  }
}

TEST(Operators, TwoPathOnRankTwoLowest) {
  VermaModule m(2);
  FixedPoint a = FixedPoint::zero(2), b(2, Rows{{1}});
  EXPECT_TRUE(eq_exact(m.e_entry_closed(1, a, b), m.e_entry_localized(1, a, b)));
  EXPECT_TRUE(eq_exact(m.f_entry_closed(1, b, a), m.f_entry_localized(1, b, a)));
}

TEST(Operators, CommutatorOnLowestRankTwo) {
  VermaModule m(2);
  const VermaRing& ring = m.ring();
  Truncation tr{2, 2};
  auto x = ModuleVector::basis(FixedPoint::zero(2), ring.nvars());
  ModuleVector fe = apply(m.op_F(1), apply(m.op_E(1), x, tr), tr);
  ModuleVector ef = apply(m.op_E(1), apply(m.op_F(1), x, tr), tr);
  EXPECT_TRUE(ef.empty());
  RatFunc want = (ring.rat(ring.t(2) + ring.t(1, -1) + ring.v(1)) -
                  ring.rat(ring.t(1) + ring.t(2, -1) + ring.v(-1))) /
                 (ring.rat(ring.v(1)) - ring.rat(ring.v(-1)));
  // [E, F] = -F E on the lowest vector
  EXPECT_TRUE(eq_exact(-fe.at(FixedPoint::zero(2)), want));
}

TEST(Operators, LoweringKillsLowest) {
  for (int n = 2; n <= 4; ++n) {
    VermaModule m(n);
    Truncation tr{n, 2};
    auto x = ModuleVector::basis(FixedPoint::zero(n), m.ring().nvars());
    for (int i = 1; i < n; ++i) {
      EXPECT_TRUE(apply(m.op_F(i), x, tr).empty());
      EXPECT_TRUE(apply(m.op_f(i), x, tr).empty());
    }
  }
}

TEST(Operators, KActsByScalar) {
  VermaModule m(3);
  Truncation tr{3, 2};
  FixedPoint p(3, Rows{{1}, {0, 1}});
  auto x = ModuleVector::basis(p, m.ring().nvars());
  auto y = apply(m.op_K(2), x, tr);
  EXPECT_TRUE(vectors_equal(y, x.scaled(m.ring().rat(m.k_scalar(2, p.degree())))));
}

TEST(Operators, FMatchesLowerAdjacency) {
  VermaModule m(3);
  Truncation tr{3, 3};
  FixedPoint p(3, Rows{{2}, {1, 1}});
  auto y = apply(m.op_F(2), ModuleVector::basis(p, m.ring().nvars()), tr);
  auto lo = lower(p, 2);
  EXPECT_EQ(y.coeffs().size(), lo.size());
  for (const auto& a : lo) EXPECT_TRUE(eq_exact(y.at(a.point), m.f_entry_closed(2, p, a.point)));
}

TEST(Operators, FfromFAndK) {
  VermaModule m(3);
  FixedPoint p(3, Rows{{1}, {1, 0}});
  for (const auto& a : lower(p, 2)) {
    // K_i^{-i} acts after F_i, so its scalar is taken at the lower degree
    RatFunc k = m.ring().rat(m.k_scalar(2, a.point.degree())).pow(-2);
    EXPECT_TRUE(eq_exact(m.op_f(2).entry(a.point, p), m.op_F(2).entry(a.point, p) * k));
  }
}

TEST(Operators, RaisingAtBoxEdgeIsDropped) {
  VermaModule m(2);
  Truncation tr{2, 1};
  auto x = ModuleVector::basis(FixedPoint(2, Rows{{1}}), m.ring().nvars());
  EXPECT_TRUE(apply(m.op_E(1), x, tr).empty());
}

TEST(TwoPath, AllAdjacentPairs) {
  for (int n = 2; n <= 4; ++n) {
    VermaModule m(n);
    auto rs = two_path_check(m, degrees_up_to(n, n == 4 ? 3 : 4));
    EXPECT_GT(rs.size(), 0u);
    EXPECT_EQ(count(rs, Status::Fail), 0);
  }
}

TEST(TwoPath, DualOrientationDisagrees) {
  VermaModule m(2, Orientation::B);
  auto rs = two_path_check(m, degrees_up_to(2, 2));
  EXPECT_GT(count(rs, Status::Fail), 0);
}

TEST(Relations, RankTwoBoxFour) {
  VermaModule m(2);
  auto rs = verify_relations(m, {2, 4});
  EXPECT_EQ(count(rs, Status::Fail), 0);
  EXPECT_GT(count(rs, Status::Pass), 0);
}

TEST(Relations, RankThreeBoxThree) {
  VermaModule m(3);
  auto rs = verify_relations(m, {3, 3});
  EXPECT_EQ(count(rs, Status::Fail), 0);
  bool saw_serre = false;
  for (const auto& r : rs)
    if (r.name == "serre_near_up" && r.status == Status::Pass) saw_serre = true;
  EXPECT_TRUE(saw_serre);
}

TEST(Relations, LiteralExponentInPrimedSerreFails) {
  VermaModule m(3);
  const VermaRing& ring = m.ring();
  const int i = 1, j = 2;
  const int c = sevostyanov_c(3, i, j);
  Relation r{"serre_literal", Json::object(), {}};
  RatFunc vpv = ring.rat(ring.v(c + 1)) + ring.rat(ring.v(c - 1));
  r.words.push_back({ring.constant(1), {m.op_e(j), m.op_e(i), m.op_e(i)}});
  r.words.push_back({-vpv, {m.op_e(i), m.op_e(j), m.op_e(i)}});
  r.words.push_back({ring.rat(ring.v(2 * c)), {m.op_e(i), m.op_e(i), m.op_e(j)}});
  auto rs = verify_relation(m, r, {3, 3});
  EXPECT_GT(count(rs, Status::Fail), 0);
}

TEST(Diagonality, OffDiagonalVanishes) {
  VermaModule m3(3);
  for (int i = 1; i <= 2; ++i)
    EXPECT_EQ(count(diagonality_check(m3, i, {3, 3}), Status::Fail), 0);
  VermaModule m4(4);
  EXPECT_EQ(count(diagonality_check(m4, 2, {4, 2}), Status::Fail), 0);
}

TEST(Mrak, ZeroRowsRankTwo) {
  VermaRing ring(2);
  auto [lhs, rhs] = mrak_sides(ring, 1, {{}, {0}, {0, 0}});
  EXPECT_TRUE(eq_exact(lhs, rhs));
}

TEST(Mrak, SubstitutedExactSmall) {
  for (int i = 1; i <= 2; ++i) {
    auto [lhs, rhs] = mrak_substituted_sides(i);
    EXPECT_TRUE(eq_exact(lhs, rhs)) << i;
  }
}

TEST(Mrak, SubstitutedRandomUpToFour) {
  for (int i = 3; i <= 4; ++i) {
    auto t = mrak_substituted_terms(i);
    sym::RandomIdentityOptions o;
    o.trials = 5;
    o.seed = 7;
    EXPECT_TRUE(eq_random(t.lhs, t.rhs, mrak_substituted_space(i), o)) << i;
    t.rhs.pop_back();
    EXPECT_FALSE(eq_random(t.lhs, t.rhs, mrak_substituted_space(i), o)) << i;
  }
}

TEST(Mrak, RandomRowsAllIndices) {
  for (int n = 2; n <= 4; ++n) {
    VermaRing ring(n);
    for (int i = 1; i < n; ++i) {
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        MrakRows rows = random_mrak_rows(n, i, 3, seed);
        validate_mrak_rows(n, i, rows);
        auto [lhs, rhs] = mrak_sides(ring, i, rows);
        EXPECT_TRUE(eq_exact(lhs, rhs)) << n << " " << i << " " << seed;
      }
    }
  }
  VermaRing ring(4);
  auto [lhs, rhs] = mrak_sides(ring, 3, random_mrak_rows(4, 3, 3, 7));
  EXPECT_TRUE(eq_exact(lhs, rhs));
}

TEST(Mrak, MalformedRows) {
  EXPECT_THROW(validate_mrak_rows(3, 1, {{}, {0, 0}, {0, 0}}), UsageError);
  EXPECT_THROW(validate_mrak_rows(3, 2, {{0}, {1, 0}, {0, 0, 0}}), UsageError);
}

}  // namespace
}  // namespace laumon
