#include <numeric>

#include <gtest/gtest.h>

#include "fibknot/twobridge.hpp"
#include "oracles.hpp"

using namespace fibknot;

namespace {

// Positive continued fraction of p/q by the Euclidean algorithm.
ContinuedFraction euclid(std::int64_t p, std::int64_t q) {
  ContinuedFraction cf;
  while (q != 0) {
    cf.push_back(p / q);
    std::int64_t r = p % q;
    p = q;
    q = r;
  }
  return cf;
}

// Same value, odd number of terms: the 4-plat with caps on both ends closes
// up as the two-bridge knot only for odd-length fractions.
ContinuedFraction odd_length(ContinuedFraction cf) {
  if (cf.size() % 2 == 1) return cf;
  if (cf.back() == 1) {
    cf.pop_back();
    cf.back() += 1;
  } else {
    cf.back() -= 1;
    cf.push_back(1);
  }
  return cf;
}

}  // namespace

TEST(ContinuedFraction, Examples) {
  EXPECT_EQ(cf_to_fraction({2, 2}), (TwoBridgeFraction{5, 2, false}));
  EXPECT_EQ(cf_to_fraction({3, 1, 2}), (TwoBridgeFraction{11, 3, false}));
  EXPECT_EQ(cf_to_fraction({2, 2, 2, 2}), (TwoBridgeFraction{29, 12, false}));
  EXPECT_EQ(cf_to_fraction({-2, -2}), (TwoBridgeFraction{5, 2, true}));
  EXPECT_THROW(cf_to_fraction({}), std::invalid_argument);
  EXPECT_THROW(cf_to_fraction({2, 0}), std::invalid_argument);
  EXPECT_THROW(cf_to_fraction({1, -1}), std::domain_error);
  EXPECT_THROW(cf_to_fraction(ContinuedFraction(200, 2)), std::overflow_error);
}

TEST(ContinuedFraction, EuclidRoundTrip) {
  for (std::int64_t p = 2; p <= 60; ++p)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      TwoBridgeFraction f = cf_to_fraction(euclid(p, q));
      EXPECT_EQ(f.p, p);
      EXPECT_EQ(f.q, q);
    }
}

TEST(ContinuedFraction, IntroFamilyIsAlwaysAKnot) {
  const std::int64_t expected[] = {11, 17, 23, 29, 35};
  for (int g = 2; g <= 40; ++g) {
    TwoBridgeFraction f = cf_to_fraction({2 * g - 1, 1, 2});
    EXPECT_TRUE(f.is_knot()) << g;
    EXPECT_EQ(f.q, 3);
    if (g <= 6) EXPECT_EQ(f.p, expected[g - 2]);
  }
}

TEST(TwoBridgeAlexander, Examples) {
  EXPECT_EQ(twobridge_alexander({3, 1}), alexander_of({1, -1, 1}));
  EXPECT_EQ(twobridge_alexander({3, 1}), alexander_from_seifert(brick_seifert(BraidWord(2, {1, 1, 1}))));
  EXPECT_EQ(twobridge_alexander({5, 3}), alexander_of({1, -3, 1}));
  EXPECT_EQ(twobridge_alexander({5, 3}), fibred_alexander({1, 0, Variant::original}));
  AlexanderPolynomial a = twobridge_alexander({29, 17});
  EXPECT_EQ(a.degree(), 4);
  EXPECT_EQ(a.determinant(), BigInt(29));
  EXPECT_EQ(a, twobridge_alexander({29, 12}));
  EXPECT_EQ(twobridge_alexander({1, 0}), alexander_of({1}));
  EXPECT_THROW(twobridge_alexander({4, 1}), std::invalid_argument);
}

TEST(TwoBridgeAlexander, PropertiesForAllSmallFractions) {
  for (std::int64_t p = 3; p <= 99; p += 2)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      AlexanderPolynomial a = twobridge_alexander({p, q});
      EXPECT_TRUE(a.poly().is_palindromic()) << p << "/" << q;
      EXPECT_EQ(abs(a.poly().sum_of_coefficients()), BigInt(1)) << p << "/" << q;
      EXPECT_EQ(a.determinant(), BigInt(p)) << p << "/" << q;
    }
}

// The imported formula against the Wirtinger presentation of a 4-plat diagram.
TEST(TwoBridgeAlexander, AgreesWithDiagramOracleForAllOddPUpTo50) {
  int checked = 0;
  for (std::int64_t p = 3; p <= 50; p += 2)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ContinuedFraction cf = odd_length(euclid(p, q));
      AlexanderPolynomial diagram = oracle::diagram_alexander(oracle::four_plat(cf), oracle::Closure::plat);
      EXPECT_EQ(twobridge_alexander(cf_to_fraction(cf)), diagram) << p << "/" << q;
      ++checked;
    }
  EXPECT_GT(checked, 300);
}

TEST(Crosscheck, WZeroMatchesTwoBridge) {
  for (int g = 1; g <= 6; ++g) {
    CrosscheckResult r = crosscheck_w0_detail(g);
    EXPECT_TRUE(r.agree) << g;
    EXPECT_EQ(r.twobridge.determinant(), r.monodromy.determinant());
    EXPECT_TRUE(crosscheck_w0(g));
  }
  EXPECT_EQ(crosscheck_w0_detail(2).monodromy.determinant(), BigInt(29));
  EXPECT_THROW(crosscheck_w0(0), std::invalid_argument);
}

TEST(Crosscheck, FractionNumeratorIsDeterminant) {
  for (int g = 1; g <= 8; ++g) {
    TwoBridgeFraction f = cf_to_fraction(ContinuedFraction(2 * g, 2));
    EXPECT_EQ(BigInt(f.p), fibred_alexander({g, 0, Variant::original}).determinant()) << g;
  }
}
