#include <gtest/gtest.h>

#include <algorithm>

#include "laumon/errors.hpp"
#include "laumon/fixedpoints.hpp"

namespace laumon {
namespace {

using Rows = std::vector<std::vector<int>>;

TEST(Enumerate, RankTwoHasOnePoint) {
  auto pts = enumerate(2, {3});
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0].at(1, 1), 3);
}

TEST(Enumerate, RankThreeDegreeOneOne) {
  auto pts = enumerate(3, {1, 1});
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0], FixedPoint(3, Rows{{1}, {0, 1}}));
  EXPECT_EQ(pts[1], FixedPoint(3, Rows{{1}, {1, 0}}));
}

TEST(Enumerate, ColumnBoundForcesPoint) {
  auto pts = enumerate(3, {0, 1});
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0], FixedPoint(3, Rows{{0}, {0, 1}}));
}

TEST(Enumerate, OrderedValidAndRowSums) {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& d : degrees_up_to(n, 5)) {
      auto pts = enumerate(n, d);
      EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
      EXPECT_EQ(std::adjacent_find(pts.begin(), pts.end()), pts.end());
      for (const auto& p : pts) {
        EXPECT_TRUE(is_valid_fixed_point(n, p.rows()));
        EXPECT_EQ(p.degree(), d);
      }
    }
  }
}

TEST(Kostant, Examples) {
  EXPECT_EQ(kostant_count(3, {1, 1}), 2u);
  EXPECT_EQ(kostant_count(3, {2, 1}), 2u);
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(kostant_count(2, {k}), 1u);
}

TEST(Kostant, MatchesEnumeration) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& d : degrees_up_to(n, 6))
      EXPECT_EQ(enumerate(n, d).size(), kostant_count(n, d));
}

TEST(FixedPointTest, RejectsBrokenMonotonicity) {
  EXPECT_THROW(FixedPoint(3, Rows{{0}, {1, 0}}), UsageError);
  EXPECT_THROW(FixedPoint(3, Rows{{-1}, {0, 0}}), UsageError);
  EXPECT_THROW(FixedPoint(3, Rows{{0}}), UsageError);
  EXPECT_FALSE(is_valid_fixed_point(3, Rows{{0}, {1, 0}}));
}

TEST(FixedPointTest, BoundaryEntriesAreZero) {
  FixedPoint p(3, Rows{{2}, {1, 1}});
  EXPECT_EQ(p.at(0, 1), 0);
  EXPECT_EQ(p.at(3, 1), 0);
  EXPECT_EQ(p.row_sum(0), 0);
  EXPECT_EQ(p.row_sum(3), 0);
  EXPECT_EQ(p.row_sum(2), 2);
}

TEST(Raise, Examples) {
  auto r = raise(FixedPoint::zero(2), 1);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].point, FixedPoint(2, Rows{{1}}));
  EXPECT_EQ(r[0].column, 1);

  r = raise(FixedPoint(3, Rows{{1}, {0, 1}}), 2);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].column, 1);
  EXPECT_EQ(r[1].column, 2);

  r = raise(FixedPoint::zero(3), 1);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].point, FixedPoint(3, Rows{{1}, {0, 0}}));
}

TEST(Lower, Examples) {
  auto l = lower(FixedPoint(2, Rows{{1}}), 1);
  ASSERT_EQ(l.size(), 1u);
  EXPECT_EQ(l[0].point, FixedPoint::zero(2));

  l = lower(FixedPoint(3, Rows{{1}, {1, 0}}), 2);
  ASSERT_EQ(l.size(), 1u);
  EXPECT_EQ(l[0].column, 1);
  EXPECT_EQ(l[0].point, FixedPoint(3, Rows{{1}, {0, 0}}));
}

TEST(Adjacency, RaiseAndLowerTranspose) {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& d : degrees_up_to(n, 4)) {
      for (const auto& p : enumerate(n, d)) {
        for (int i = 1; i < n; ++i) {
          for (const auto& up : raise(p, i)) {
            auto back = lower(up.point, i);
            auto hit = std::find_if(back.begin(), back.end(), [&](const Adjacent& a) {
              return a.point == p && a.column == up.column;
            });
            EXPECT_NE(hit, back.end());
          }
          for (const auto& down : lower(p, i)) {
            auto fwd = raise(down.point, i);
            auto hit = std::find_if(fwd.begin(), fwd.end(), [&](const Adjacent& a) {
              return a.point == p && a.column == down.column;
            });
            EXPECT_NE(hit, fwd.end());
          }
        }
      }
    }
  }
}

TEST(FixedPointJson, RoundTrip) {
  FixedPoint p(4, Rows{{2}, {1, 1}, {0, 1, 0}});
  Json j = to_json(p);
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["rows"], Json::parse("[[2],[1,1],[0,1,0]]"));
  EXPECT_EQ(fixed_point_from_json(j), p);
}

TEST(Degrees, BoxAndTotal) {
  auto b = box_degrees(3, 2);
  EXPECT_EQ(b.size(), 9u);
  EXPECT_EQ(b.front(), (Degree{0, 0}));
  EXPECT_EQ(b.back(), (Degree{2, 2}));
  EXPECT_EQ(degrees_up_to(3, 1).size(), 3u);
  EXPECT_THROW(check_degree(3, {1}), UsageError);
  EXPECT_THROW(check_degree(3, {1, -1}), UsageError);
}

}  // namespace
}  // namespace laumon
