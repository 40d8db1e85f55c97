#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "fibknot/pa_cert.hpp"

using namespace fibknot;

namespace {

// Largest eigenvalue of N N^T by a dense symmetric eigensolver.
double eigen_mu(const IntMatrix& n) {
  Eigen::MatrixXd m(n.rows(), n.cols());
  for (std::size_t i = 0; i < n.rows(); ++i)
    for (std::size_t j = 0; j < n.cols(); ++j) m(i, j) = static_cast<double>(n(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m * m.transpose());
  return es.eigenvalues().maxCoeff();
}

double chain_mu_closed_form(int g) {
  const double c = std::cos(std::numbers::pi / (2 * g + 1));
  return 4 * c * c;
}

TwistWord2 random_twist_word(std::mt19937_64& rng, int len) {
  std::uniform_int_distribution<int> d(0, 3);
  TwistWord2 w;
  for (int k = 0; k < len; ++k) {
    int x = d(rng);
    w.push_back({x < 2 ? Multitwist::A : Multitwist::B, x % 2 == 0 ? 1 : -1});
  }
  return w;
}

double numeric_trace(const TwistWord2& w, double mu) {
  const double s = std::sqrt(mu);
  Eigen::Matrix2d m = Eigen::Matrix2d::Identity();
  for (const auto& l : w) {
    Eigen::Matrix2d g = Eigen::Matrix2d::Identity();
    if (l.curve == Multitwist::A)
      g(0, 1) = -s * l.power;
    else
      g(1, 0) = s * l.power;
    m = m * g;
  }
  return m.trace();
}

}  // namespace

TEST(ChainPair, Examples) {
  EXPECT_EQ(chain_pair(1, true).intersections, (IntMatrix{{1}}));
  EXPECT_EQ(chain_pair(2, true).intersections, (IntMatrix{{1, 1}, {0, 1}}));
  EXPECT_EQ(chain_pair(3, false).intersections, (IntMatrix{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
  for (int g = 1; g <= 64; ++g) EXPECT_TRUE(curves_connected(chain_pair(g, true)));
  MulticurvePair split{IntMatrix{{1, 0}, {0, 1}}, true};
  EXPECT_FALSE(curves_connected(split));
}

TEST(Mu, Examples) {
  Enclosure one = mu(IntMatrix{{1}});
  EXPECT_TRUE(one.contains(1.0));
  EXPECT_LE(one.width(), 1e-9);
  const double phi2 = chain_mu_closed_form(2);
  EXPECT_NEAR(phi2, 2.618034, 1e-6);
  Enclosure e2 = mu(chain_pair(2, true).intersections);
  EXPECT_LE(e2.width(), 1e-9);
  EXPECT_NEAR(e2.midpoint(), phi2, 1e-9);
  EXPECT_NEAR(mu(chain_pair(3, true).intersections).midpoint(), 3.246980, 1e-6);
  EXPECT_THROW(mu(IntMatrix(2, 2)), std::invalid_argument);
}

TEST(Mu, MatchesEigenSolverAndClosedForm) {
  double prev = 0;
  for (int g = 1; g <= 12; ++g) {
    const IntMatrix n = chain_pair(g, true).intersections;
    Enclosure e = mu(n);
    EXPECT_NEAR(e.midpoint(), eigen_mu(n), 1e-9) << g;
    EXPECT_NEAR(e.midpoint(), chain_mu_closed_form(g), 1e-9) << g;
    EXPECT_GT(e.lo, Rational(prev));
    EXPECT_LT(e.hi, Rational(4));
    prev = e.midpoint();
  }
}

TEST(Mu, RandomIntersectionMatrices) {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> d(0, 3);
  for (int k = 0; k < 30; ++k) {
    IntMatrix n(1 + k % 4, 1 + (k / 4) % 4);
    for (std::size_t i = 0; i < n.rows(); ++i)
      for (std::size_t j = 0; j < n.cols(); ++j) n(i, j) = d(rng);
    n(0, 0) = 1;
    EXPECT_NEAR(mu(n).midpoint(), eigen_mu(n), 1e-8 * std::max(1.0, eigen_mu(n)));
  }
}

TEST(Representation, DeterminantOneAndExactTraces) {
  TwistWord2 ab = parse_twist_word("A B^-1");
  RepMatrix m = represent(ab);
  EXPECT_EQ(m.det(), SqrtMuElement::constant(1));
  // [[1 + mu, s], [-s, 1]]: trace 2 + mu
  EXPECT_EQ(m.trace(), (SqrtMuElement{LaurentPoly(0, {2, 1}), LaurentPoly()}));
  EXPECT_EQ(represent(parse_twist_word("A B")).trace(), (SqrtMuElement{LaurentPoly(0, {2, -1}), LaurentPoly()}));
  EXPECT_EQ(parse_twist_word("a b"), parse_twist_word("A^-1 B^-1"));
  EXPECT_THROW(parse_twist_word("C"), std::invalid_argument);
}

TEST(Representation, TraceMatchesFloatingProduct) {
  std::mt19937_64 rng(52);
  const double mu2 = chain_mu_closed_form(2);
  for (int k = 0; k < 50; ++k) {
    TwistWord2 w = random_twist_word(rng, 1 + k % 9);
    Classification c;
    try {
      c = classify(w, chain_pair(2, true).intersections);
    } catch (const Indeterminate&) {
      continue;
    }
    EXPECT_NEAR(c.trace_value, numeric_trace(w, mu2), 1e-8 * std::max(1.0, std::abs(c.trace_value)));
    EXPECT_LE(c.trace_range.lo, Rational(c.trace_value));
  }
}

TEST(Classify, Examples) {
  const IntMatrix n2 = chain_pair(2, true).intersections;
  EXPECT_EQ(classify(parse_twist_word("A"), n2).type, MappingClassType::parabolic);
  EXPECT_EQ(classify(parse_twist_word("B A B^-1"), n2).type, MappingClassType::parabolic);
  Classification pa = classify(parse_twist_word("A B^-1"), n2);
  EXPECT_EQ(pa.type, MappingClassType::pseudo_anosov);
  const double mu2 = chain_mu_closed_form(2);
  EXPECT_NEAR(pa.trace_value, 2 + mu2, 1e-9);
  const double t = 2 + mu2;
  EXPECT_NEAR(pa.dilatation, (t + std::sqrt(t * t - 4)) / 2, 1e-9);
  EXPECT_NEAR(pa.dilatation, 4.39026, 1e-5);
  Classification ell = classify(parse_twist_word("A B"), n2);
  EXPECT_EQ(ell.type, MappingClassType::elliptic);
  EXPECT_NEAR(ell.trace_value, -0.618034, 1e-6);
  EXPECT_THROW(classify({}, n2), std::invalid_argument);
}

TEST(Classify, BZeroIsPseudoAnosovForEveryChain) {
  for (int g = 1; g <= 10; ++g) {
    Classification c = classify(parse_twist_word("A B^-1"), chain_pair(g, true).intersections);
    EXPECT_EQ(c.type, MappingClassType::pseudo_anosov);
    EXPECT_EQ(c.trace, (SqrtMuElement{LaurentPoly(0, {2, 1}), LaurentPoly()}));
    EXPECT_GT(c.dilatation, 1.0);
  }
}

// A B has trace 2 - mu: elliptic while mu < 4, which holds for every chain.
TEST(Classify, ABIsEllipticForChainsBeyondGenusOne) {
  EXPECT_EQ(classify(parse_twist_word("A B"), IntMatrix{{1}}).type, MappingClassType::elliptic);
  for (int g = 2; g <= 8; ++g)
    EXPECT_EQ(classify(parse_twist_word("A B"), chain_pair(g, true).intersections).type, MappingClassType::elliptic);
  // mu = 4 exactly makes A B parabolic; the margin refuses a floating verdict
  EXPECT_THROW(classify(parse_twist_word("A B"), IntMatrix{{2}}), Indeterminate);
}

TEST(Classify, ConjugationInvariant) {
  std::mt19937_64 rng(53);
  const IntMatrix n3 = chain_pair(3, true).intersections;
  for (int k = 0; k < 40; ++k) {
    TwistWord2 w = random_twist_word(rng, 1 + k % 6);
    TwistWord2 u = random_twist_word(rng, 1 + k % 4);
    TwistWord2 conj = u;
    conj.insert(conj.end(), w.begin(), w.end());
    TwistWord2 ui = inverse(u);
    conj.insert(conj.end(), ui.begin(), ui.end());
    EXPECT_EQ(represent(conj).trace(), represent(w).trace());
    MappingClassType a, b;
    try {
      a = classify(w, n3).type;
      b = classify(conj, n3).type;
    } catch (const Indeterminate&) {
      continue;
    }
    EXPECT_EQ(a, b);
  }
}

TEST(ComplementEuler, Examples) {
  EXPECT_EQ(complement_euler(2, true), 0);
  EXPECT_EQ(complement_euler(2, false), 1);
  EXPECT_EQ(complement_euler(5, false), 1);
  for (int g = 1; g <= 64; ++g) {
    EXPECT_EQ(complement_euler(g, true), 0);
    EXPECT_EQ(complement_euler(g, false), 1);
  }
}

TEST(RibbonFaces, SmallGraphs) {
  // one vertex, one loop: planar circle
  EXPECT_EQ(ribbon_faces({{{0, 1}}, 1}), 2);
  // theta graph: vertices with half-edges (0,2,4) and (1,5,3)
  EXPECT_EQ(ribbon_faces({{{0, 2, 4}, {1, 5, 3}}, 3}), 3);
  // one vertex, two interleaved loops: torus, one face
  EXPECT_EQ(ribbon_faces({{{0, 2, 1, 3}}, 2}), 1);
  EXPECT_EQ(ribbon_faces({{{0, 1, 2, 3}}, 2}), 3);
  EXPECT_THROW(ribbon_faces({{{0, 0}}, 1}), std::invalid_argument);
  EXPECT_THROW(ribbon_faces({{{0}}, 1}), std::invalid_argument);
}

TEST(RibbonFaces, ChainSearchFindsOneFaceEmbedding) {
  for (int g = 1; g <= 6; ++g) {
    RotationSearch s = search_chain_rotation(g);
    ASSERT_TRUE(s.orientations.has_value()) << g;
    RibbonGraph r = chain_ribbon_graph(g, *s.orientations);
    const int v = r.vertex_count(), e = r.edge_count;
    EXPECT_EQ(v - e + ribbon_faces(r), 2 - 2 * g);
  }
}
