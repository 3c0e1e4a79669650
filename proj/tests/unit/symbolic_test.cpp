#include <gtest/gtest.h>

#include <random>

#include "laumon/errors.hpp"
#include "laumon/json_io.hpp"
#include "laumon/ring.hpp"
#include "laumon/symbolic.hpp"

namespace laumon {
namespace {

using sym::Exponents;
using sym::LaurentPoly;
using sym::RatFunc;

class SymbolicTest : public ::testing::Test {
 protected:
  VermaRing ring{2};
  LaurentPoly t1() const { return ring.poly(ring.t(1)); }
  LaurentPoly t2() const { return ring.poly(ring.t(2)); }
  LaurentPoly v(int p = 1) const { return ring.poly(ring.v(p)); }
  LaurentPoly one() const { return ring.poly(ring.one()); }
};

TEST_F(SymbolicTest, AdditiveCancellation) {
  EXPECT_EQ((t1() + v()) + (-t1()), v());
}

TEST_F(SymbolicTest, DifferenceOfSquares) {
  EXPECT_EQ((t1() + v()) * (t1() - v()), t1() * t1() - v(2));
}

TEST_F(SymbolicTest, ZeroAbsorbs) {
  LaurentPoly zero(ring.nvars());
  EXPECT_TRUE((zero * (t1() + v(-3))).is_zero());
}

TEST_F(SymbolicTest, MismatchedSpacesAreUsageErrors) {
  VermaRing other(3);
  EXPECT_THROW(t1() + other.poly(other.t(1)), UsageError);
  EXPECT_THROW(RatFunc(t1()) * RatFunc(other.poly(other.t(1))), UsageError);
}

TEST_F(SymbolicTest, CanonicalOrderIsGradedLex) {
  LaurentPoly p = v(2) + t1() + one() + ring.poly(ring.t(1, -1));
  const auto& terms = p.terms();
  ASSERT_EQ(terms.size(), 4U);
  for (std::size_t i = 1; i < terms.size(); ++i) EXPECT_LT(terms[i - 1].exps, terms[i].exps);
  EXPECT_EQ(terms.front().exps, ring.t(1, -1));
  EXPECT_EQ(terms.back().exps, ring.v(2));
}

TEST_F(SymbolicTest, InverseOfBinomial) {
  RatFunc x = RatFunc::one_minus_inverse(ring.v(2));
  EXPECT_TRUE(eq_exact(x * RatFunc(one() - v(2)), ring.constant(1)));
  // The tracked factor cancels structurally.
  EXPECT_TRUE((x * RatFunc::one_minus(ring.v(2))).same_representation(ring.constant(1)));
}

TEST_F(SymbolicTest, AdditiveIdentity) {
  RatFunc a = RatFunc::quotient(t1() + v(), one() - ring.poly(ring.weight(2, 1, 2)));
  EXPECT_TRUE((a + RatFunc(ring.nvars())).same_representation(a));
}

TEST_F(SymbolicTest, GeometricSeriesComplementarity) {
  // 1/(1-x) + 1/(1-1/x) = (1 - x)/(1 - x) = 1 with x = v^2.
  RatFunc s = RatFunc::one_minus_inverse(ring.v(2)) + RatFunc::one_minus_inverse(ring.v(-2));
  EXPECT_TRUE(eq_exact(s, ring.constant(1)));
  EXPECT_TRUE(s.reduced().same_representation(ring.constant(1)));
}

TEST_F(SymbolicTest, DivisionByZeroThrows) {
  EXPECT_THROW(ring.constant(1) / RatFunc(ring.nvars()), ArithmeticError);
  EXPECT_THROW(RatFunc(ring.nvars()).inverse(), ArithmeticError);
  EXPECT_THROW(RatFunc::quotient(one(), LaurentPoly(ring.nvars())), ArithmeticError);
}

TEST_F(SymbolicTest, NormalizeCancelsMonomialContent) {
  RatFunc r = RatFunc::quotient(ring.poly(ring.t(1) + ring.v(1)), t1()).normalized();
  EXPECT_TRUE(r.same_representation(RatFunc(v())));
}

TEST_F(SymbolicTest, NormalizeCancelsTrackedFactor) {
  LaurentPoly p = t1() + v();
  LaurentPoly q = t2() + one() + v(3);
  RatFunc num = RatFunc::one_minus(ring.v(2)) * RatFunc(p);
  RatFunc den = RatFunc::one_minus(ring.v(2)) * RatFunc(q);
  RatFunc r = (num / den).normalized();
  EXPECT_TRUE(r.numerator_factors().empty());
  EXPECT_EQ(r.numerator(), p);
  EXPECT_EQ(r.denominator(), q);
}

TEST_F(SymbolicTest, NormalizeDoesNotComputeGcd) {
  RatFunc orig = RatFunc::quotient(t1() * t1() - v(2), t1() - v());
  RatFunc r = orig.normalized();
  EXPECT_TRUE(r.same_representation(orig));
  EXPECT_EQ(r.numerator().size(), 2U);
  EXPECT_EQ(r.denominator().size(), 2U);
  // reduced() performs exact trial division by tracked factors.
  RatFunc red = r.reduced();
  EXPECT_TRUE(red.denominator().is_one());
  EXPECT_EQ(red.numerator(), t1() + v());
}

TEST_F(SymbolicTest, EqExactExamples) {
  RatFunc a = RatFunc::quotient(t1() * t1() - v(2), t1() - v());
  EXPECT_TRUE(eq_exact(a, RatFunc(t1() + v())));
  EXPECT_FALSE(eq_exact(RatFunc(v()), RatFunc(v(-1))));
}

TEST_F(SymbolicTest, EqRandomExamples) {
  RatFunc a = RatFunc::quotient(t1() * t1() - v(2), t1() - v());
  for (std::uint64_t seed : {1ULL, 7ULL, 12345ULL}) {
    EXPECT_TRUE(eq_random(a, RatFunc(t1() + v()), ring.space(), {3, seed, 64}));
    EXPECT_FALSE(eq_random(RatFunc(v()), RatFunc(v(-1)), ring.space(), {3, seed, 64}));
  }
  EXPECT_THROW(eq_random(a, a, ring.space(), {0, 1, 64}), UsageError);
}

TEST_F(SymbolicTest, EqRandomRetryBudget) {
  // A denominator that vanishes at the first drawn point forces a retry.
  auto first = sym::random_points(ring.space(), 1, 11)[0];
  mpz_class c = first.values[0].get_num();
  RatFunc r = RatFunc::quotient(one(), t1() - ring.poly(ring.one(), c));
  EXPECT_THROW(eq_random(r, r, ring.space(), {1, 11, 0}), EvaluationError);
  EXPECT_TRUE(eq_random(r, r, ring.space(), {1, 11, 1}));
  EXPECT_THROW(RatFunc::one_minus(ring.one()), DegeneracyError);
}

TEST_F(SymbolicTest, EvalExamples) {
  auto pt = ring.point({2, 3}, 2);
  EXPECT_EQ(eval(RatFunc::one_minus_inverse(ring.v(2)), pt), mpq_class(-1, 3));
  EXPECT_EQ(eval(RatFunc(t1() * t2()), pt), mpq_class(6));
  auto bad = ring.point({2, 3}, 1);
  EXPECT_THROW(eval(RatFunc::one_minus_inverse(ring.v(2)), bad), EvaluationError);
}

TEST_F(SymbolicTest, EvalHalfIntegerExponent) {
  RatFunc r = ring.rat(ring.v_half(3));
  EXPECT_EQ(eval(r, ring.point({1, 1}, 4)), mpq_class(8));
  EXPECT_THROW(eval(r, ring.point({1, 1}, 2)), EvaluationError);
}

TEST_F(SymbolicTest, GeometricBlock) {
  EXPECT_EQ(sym::geometric_block(0, 2, ring.one(), ring.space()), one() + v(2) + v(4));
  EXPECT_TRUE(sym::geometric_block(3, 2, ring.t(1), ring.space()).is_zero());
  EXPECT_EQ(sym::geometric_block(1, 1, ring.one(), ring.space()), v(2));
}

TEST_F(SymbolicTest, DivideExact) {
  LaurentPoly f = one() - ring.poly(ring.weight(2, 1, 2));
  LaurentPoly g = t1() + v(-1) + t2() * t2();
  auto q = (f * g).divide_exact(f);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, g);
  EXPECT_FALSE((f * g + one()).divide_exact(f).has_value());
  EXPECT_FALSE(one().divide_exact(one() - v(2)).has_value());
}

TEST_F(SymbolicTest, JsonRoundTrip) {
  RatFunc r = RatFunc::quotient(t1() - ring.poly(ring.v_half(3), 5), one() - v(2));
  Json j = to_json(r, ring.space());
  EXPECT_EQ(j["num"][1][0][2], 1.5);
  EXPECT_EQ(j["num"][1][1], "-5");
  RatFunc back = ratfunc_from_json(j, ring.space());
  EXPECT_TRUE(eq_exact(back, r));
  EXPECT_EQ(to_json(back, ring.space()), j);
}

// --- property tests -------------------------------------------------------

LaurentPoly random_poly(std::mt19937_64& gen, int nvars, int terms) {
  std::uniform_int_distribution<int> exp(-3, 3);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::vector<LaurentPoly::Term> ts;
  for (int i = 0; i < terms; ++i) {
    Exponents e(nvars);
    for (int k = 0; k < nvars; ++k) e.set(k, exp(gen));
    ts.push_back({e, coeff(gen)});
  }
  return LaurentPoly::from_terms(nvars, std::move(ts));
}

RatFunc random_ratfunc(std::mt19937_64& gen, const VermaRing& ring) {
  std::uniform_int_distribution<int> exp(-2, 2);
  RatFunc r(random_poly(gen, ring.nvars(), 3));
  for (int f = 0; f < 2; ++f) {
    Exponents m = ring.weight(1 + f % 2, 2 - f % 2, exp(gen));
    r *= RatFunc::one_minus_inverse(m);
  }
  return r;
}

TEST(SymbolicProperties, RingAxioms) {
  std::mt19937_64 gen(42);
  for (int trial = 0; trial < 40; ++trial) {
    LaurentPoly a = random_poly(gen, 3, 5);
    LaurentPoly b = random_poly(gen, 3, 4);
    LaurentPoly c = random_poly(gen, 3, 6);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(SymbolicProperties, FieldAxiomsAndEvalHomomorphism) {
  VermaRing ring(2);
  std::mt19937_64 gen(7);
  auto points = sym::random_points(ring.space(), 2, 99);
  for (int trial = 0; trial < 25; ++trial) {
    RatFunc a = random_ratfunc(gen, ring);
    RatFunc b = random_ratfunc(gen, ring);
    RatFunc c = random_ratfunc(gen, ring);
    EXPECT_TRUE(eq_exact(a * (b + c), a * b + a * c));
    EXPECT_TRUE(eq_exact((a + b) - b, a));
    if (!b.is_zero()) EXPECT_TRUE(eq_exact((a / b) * b, a));
    for (const auto& pt : points) {
      EXPECT_EQ(eval(a * b, pt), eval(a, pt) * eval(b, pt));
      EXPECT_EQ(eval(a + b, pt), eval(a, pt) + eval(b, pt));
    }
    // Equivalence relation on the generated set.
    EXPECT_TRUE(eq_exact(a, a));
    EXPECT_EQ(eq_exact(a, b), eq_exact(b, a));
    // eq_random agrees with eq_exact.
    EXPECT_EQ(eq_random(a, b, ring.space(), {3, 5, 64}), eq_exact(a, b));
    EXPECT_TRUE(eq_random(a * (b + c), a * b + a * c, ring.space(), {3, 5, 64}));
    // reduced() preserves the value.
    EXPECT_TRUE(eq_exact((a + b).reduced(), a + b));
  }
}

TEST(SymbolicProperties, SeededDeterminism) {
  VermaRing ring(3);
  auto p1 = sym::random_points(ring.space(), 5, 2024);
  auto p2 = sym::random_points(ring.space(), 5, 2024);
  ASSERT_EQ(p1.size(), p2.size());
  for (std::size_t i = 0; i < p1.size(); ++i) EXPECT_EQ(p1[i].values, p2[i].values);
  auto p3 = sym::random_points(ring.space(), 5, 2025);
  EXPECT_NE(p1[0].values, p3[0].values);
  for (const auto& pt : p1) {
    for (const auto& x : pt.values) {
      EXPECT_GE(x, 2);
    }
  }
}

}  // namespace
}  // namespace laumon
