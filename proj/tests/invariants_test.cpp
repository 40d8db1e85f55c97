#include <chrono>
#include <random>

#include <gtest/gtest.h>

#include "fibknot/invariants.hpp"
#include "oracles.hpp"

using namespace fibknot;

namespace {

BraidWord sigma1_power(int k) { return BraidWord::from_encoded(2, std::vector<int>(k, 1)); }

// Torus knot T(2, 2k+1): 1 - t + t^2 - ... + t^{2k}.
AlexanderPolynomial torus_two(int k) {
  std::vector<BigInt> c;
  for (int i = 0; i <= 2 * k; ++i) c.emplace_back(i % 2 == 0 ? 1 : -1);
  return AlexanderPolynomial(LaurentPoly(0, c));
}

}  // namespace

TEST(Burau, Examples) {
  EXPECT_EQ(reduced_burau(BraidWord(4)), LaurentMatrix::identity(3));
  LaurentMatrix s1 = reduced_burau(BraidWord(2, {1}));
  ASSERT_EQ(s1.rows(), 1u);
  EXPECT_EQ(s1(0, 0), -LaurentPoly::t());
  EXPECT_EQ(reduced_burau(BraidWord(3, {1, 2, 1})), reduced_burau(BraidWord(3, {2, 1, 2})));
}

TEST(Burau, HomomorphismAndRelations) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 60; ++k) {
    int n = 3 + k % 5;
    BraidWord u = oracle::random_word(rng, n, 8), v = oracle::random_word(rng, n, 8);
    EXPECT_EQ(reduced_burau(compose(u, v)), reduced_burau(u) * reduced_burau(v));
    EXPECT_EQ(reduced_burau(compose(u, inverse(u))), LaurentMatrix::identity(n - 1));
    std::uniform_int_distribution<int> idx(1, n - 2);
    int i = idx(rng);
    EXPECT_EQ(reduced_burau(BraidWord(n, {i, i + 1, i})), reduced_burau(BraidWord(n, {i + 1, i, i + 1})));
    if (n >= 4) {
      EXPECT_EQ(reduced_burau(BraidWord(n, {1, n - 1})), reduced_burau(BraidWord(n, {n - 1, 1})));
    }
  }
}

TEST(Burau, GeneratorMatchesSingleLetterWord) {
  for (int n = 2; n <= 6; ++n)
    for (int i = 1; i < n; ++i)
      for (int s : {1, -1})
        EXPECT_EQ(burau_generator(n, BraidLetter(s * i)), reduced_burau(BraidWord(n, {s * i})));
}

TEST(AlexanderFromBurau, Examples) {
  EXPECT_EQ(alexander_from_burau(BraidWord(2, {1})), alexander_of({1}));
  EXPECT_EQ(alexander_from_burau(sigma1_power(3)), alexander_of({1, -1, 1}));
  EXPECT_EQ(alexander_from_burau(sigma1_power(3)), alexander_from_seifert(brick_seifert(sigma1_power(3))));
  for (int n = 0; n <= 5; ++n)
    EXPECT_EQ(alexander_from_burau(build_family({2, n, Variant::original}).beta), alexander_of({1}));
  EXPECT_THROW(alexander_from_burau(BraidWord(2, {1, 1})), std::invalid_argument);
}

TEST(AlexanderFromBurau, FigureEightClosure) {
  EXPECT_EQ(alexander_from_burau(BraidWord(3, {1, -2, 1, -2})), alexander_of({1, -3, 1}));
}

TEST(AlexanderFromBurau, KnotPropertiesOnRandomWords) {
  std::mt19937_64 rng(32);
  for (int k = 0; k < 80; ++k) {
    BraidWord w = oracle::random_knot_word(rng, 2 + k % 5, 14, false);
    AlexanderPolynomial a = alexander_from_burau(w);
    EXPECT_TRUE(a.poly().is_palindromic()) << to_text(w);
    EXPECT_EQ(abs(a.poly().sum_of_coefficients()), BigInt(1)) << to_text(w);
    EXPECT_EQ(alexander_from_burau(mirror(w)), a);
  }
}

// Wirtinger presentation of the diagram against the Burau route.
TEST(AlexanderFromBurau, AgreesWithDiagramOracle) {
  std::mt19937_64 rng(33);
  for (int k = 0; k < 80; ++k) {
    BraidWord w = oracle::random_knot_word(rng, 2 + k % 5, 14, false);
    EXPECT_EQ(alexander_from_burau(w), oracle::diagram_alexander(w, oracle::Closure::braid)) << to_text(w);
  }
}

TEST(AlexanderFromBurau, ThirteenStrandFamilyIsFast) {
  BraidWord w = build_family({6, 10, Variant::original}).beta;
  auto start = std::chrono::steady_clock::now();
  EXPECT_EQ(alexander_from_burau(w), alexander_of({1}));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(secs, 5.0);
}

TEST(BrickSeifert, Examples) {
  EXPECT_EQ(brick_seifert(BraidWord(2, {1})).rows(), 0u);
  SeifertMatrix s5 = brick_seifert(sigma1_power(5));
  EXPECT_EQ(s5.rows(), 4u);
  EXPECT_EQ(alexander_from_seifert(s5), alexander_of({1, -1, 1, -1, 1}));
  EXPECT_EQ(alexander_from_seifert(s5), alexander_from_burau(sigma1_power(5)));
  EXPECT_THROW(brick_seifert(BraidWord(3, {1, 1, 1})), std::invalid_argument);
}

TEST(BrickSeifert, SizeAndIntersectionForm) {
  std::mt19937_64 rng(34);
  for (int k = 0; k < 100; ++k) {
    int n = 2 + k % 5;
    BraidWord w = oracle::random_knot_word(rng, n, 16, k % 2 == 0);
    SeifertMatrix s = brick_seifert(w);
    EXPECT_EQ(static_cast<int>(s.rows()), static_cast<int>(w.length()) - n + 1);
    EXPECT_EQ(s.rows() % 2, 0u);
    EXPECT_EQ(determinant(s - s.transpose()), BigInt(1)) << to_text(w);
  }
}

// 50 homogeneous words, among them the odd powers of sigma_1 up to 13.
TEST(BrickSeifert, AgreesWithBurauOnHomogeneousCorpus) {
  std::vector<BraidWord> corpus;
  for (int k = 0; k <= 6; ++k) corpus.push_back(sigma1_power(2 * k + 1));
  std::mt19937_64 rng(35);
  while (corpus.size() < 50) corpus.push_back(oracle::random_knot_word(rng, 2 + corpus.size() % 5, 18, true));
  for (const auto& w : corpus)
    EXPECT_EQ(alexander_from_seifert(brick_seifert(w)), alexander_from_burau(w)) << to_text(w);
}

TEST(BrickSeifert, AgreesWithBurauOnMixedWords) {
  std::mt19937_64 rng(36);
  for (int k = 0; k < 60; ++k) {
    BraidWord w = oracle::random_knot_word(rng, 2 + k % 5, 16, false);
    EXPECT_EQ(alexander_from_seifert(brick_seifert(w)), alexander_from_burau(w)) << to_text(w);
  }
}

TEST(AlexanderFromSeifert, Examples) {
  EXPECT_EQ(alexander_from_seifert(SeifertMatrix(0, 0)), alexander_of({1}));
  EXPECT_EQ(alexander_from_seifert(brick_seifert(sigma1_power(3))), alexander_of({1, -1, 1}));
}

TEST(Signature, Examples) {
  EXPECT_EQ(signature_function(SeifertMatrix(0, 0), {1, 2}), 0);
  EXPECT_EQ(signature_function(brick_seifert(sigma1_power(3)), {1, 2}), -2);
  for (int g = 1; g <= 6; ++g) {
    SeifertMatrix s = brick_seifert(sigma1_power(2 * g + 1));
    EXPECT_EQ(signature_function(s, {1, 2}), -2 * g);
    // negative definite: every leading principal minor of S + S^T alternates in sign
    RationalMatrix sym = convert<Rational>(s) + convert<Rational>(s.transpose());
    EXPECT_EQ(inertia(sym).negative, 2 * g);
  }
}

TEST(Signature, MirrorNegates) {
  std::mt19937_64 rng(37);
  for (int k = 0; k < 40; ++k) {
    BraidWord w = oracle::random_knot_word(rng, 2 + k % 4, 14, false);
    SeifertMatrix s = brick_seifert(w), m = brick_seifert(mirror(w));
    EXPECT_EQ(signature_function(m, {1, 2}), -signature_function(s, {1, 2}));
    for (CirclePoint p : {CirclePoint{1, 7}, CirclePoint{2, 9}, CirclePoint{3, 11}}) {
      try {
        EXPECT_EQ(signature_function(m, p), -signature_function(s, p));
      } catch (const JumpPoint&) {
      }
    }
  }
}

TEST(Signature, NumericAgreesWithExactNearMinusOne) {
  // T(2,5) has roots at the primitive 10th roots of unity; 0.49 of a turn is
  // between the root at 0.3 and -1.
  SeifertMatrix s = brick_seifert(sigma1_power(5));
  EXPECT_EQ(signature_function(s, {49, 100}), signature_function(s, {1, 2}));
  EXPECT_EQ(signature_function(s, {1, 20}), 0);
  EXPECT_EQ(signature_function(s, {1, 5}), -2);
}

TEST(Signature, RefusesJumpPoints) {
  SeifertMatrix s = brick_seifert(sigma1_power(3));  // roots at exp(+-i pi/3)
  EXPECT_THROW(signature_function(s, {1, 6}), JumpPoint);
  EXPECT_THROW(signature_function(s, {1, 0}), std::invalid_argument);
}

TEST(Determinant, Examples) {
  EXPECT_EQ(knot_determinant(BraidWord(2, {1})), BigInt(1));
  EXPECT_EQ(knot_determinant(sigma1_power(3)), BigInt(3));
  EXPECT_EQ(knot_determinant(sigma1_power(5)), BigInt(5));
  EXPECT_EQ(knot_determinant(brick_seifert(sigma1_power(5))), BigInt(5));
}
