#include <gtest/gtest.h>

#include "bargmann/fqhe.hpp"
#include "bargmann/operators.hpp"
#include "bargmann/shapes.hpp"
#include "support/generators.hpp"

namespace bargmann {
namespace {

using testing::Gen;
using testing::var;

const GaussianRational kI = GaussianRational::i();

// w_j = t_j + i u_j, written out here rather than taken from the frame.
Polynomial w(int j) { return var(0, j) + var(1, j) * kI; }
Polynomial wbar(int j) { return var(0, j) - var(1, j) * kI; }

TEST(Dbar, Examples) {
  EXPECT_TRUE(dbar(w(1), 1).is_zero());
  EXPECT_EQ(dbar(wbar(1), 1), Polynomial(1));
  EXPECT_EQ(dbar(var(0, 1), 1), Polynomial(GaussianRational(Rational(1, 2))));
  EXPECT_TRUE(dbar(wbar(2), 1).is_zero());
  EXPECT_THROW(dbar(var(2, 1), 1), std::invalid_argument);
  EXPECT_THROW(dbar(var(0, 1), 1, 3), std::invalid_argument);
}

TEST(Dbar, OperatorsCommute) {
  Gen g(401);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial p = g.polynomial(3, 2, 4, 6);
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; b <= 3; ++b) EXPECT_EQ(dbar(dbar(p, a), b), dbar(dbar(p, b), a));
    }
  }
}

TEST(Dbar, HolomorphyCharacterizesTheSubring) {
  Gen g(402);
  for (int trial = 0; trial < 20; ++trial) {
    // Polynomials in w alone are holomorphic.
    Polynomial p;
    for (int k = 0; k < 3; ++k) {
      Polynomial term(g.scalar());
      for (int e = g.integer(0, 3); e > 0; --e) term = term * w(g.integer(1, 3));
      p += term;
    }
    EXPECT_TRUE(is_holomorphic(p, 3));
    // Any wbar factor breaks it.
    if (!p.is_zero() && p.degree() >= 0) {
      EXPECT_FALSE(is_holomorphic(p * wbar(g.integer(1, 3)), 3));
    }
  }
  EXPECT_FALSE(is_holomorphic(var(0, 1), 3));
}

TEST(HolomorphicFrame, InvertibleSubstitution) {
  const HolomorphicFrame frame{3};
  Gen g(403);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial p = g.polynomial(3, 2, 4);
    EXPECT_EQ(frame.from_frame(frame.to_frame(p)), p);
  }
  EXPECT_EQ(HolomorphicFrame::w(2), w(2));
  EXPECT_EQ(HolomorphicFrame::wbar(2), wbar(2));
  // t_1 = (w + wbar)/2
  EXPECT_EQ(frame.to_frame(var(0, 1)),
            (Polynomial::variable(0, 1) + Polynomial::variable(1, 1)) * GaussianRational(Rational(1, 2)));
}

TEST(Laughlin, HolomorphicShapeIsTheVandermonde) {
  const Polynomial vandermonde = (w(1) - w(2)) * (w(1) - w(3)) * (w(2) - w(3));
  const Polynomial shape = holomorphic_shape();
  EXPECT_EQ(shape, canonical_form(vandermonde));
  EXPECT_TRUE(is_antisymmetric(shape, 3));
  EXPECT_EQ(shape.degree(), 3);
  EXPECT_TRUE(shape.is_homogeneous());
  EXPECT_TRUE(proportional(vandermonde_determinant(3), vandermonde));
  EXPECT_EQ(vandermonde_product(3), vandermonde);
}

TEST(Laughlin, Report) {
  const LaughlinReport r = laughlin_report();
  EXPECT_EQ(r.shape_count, 6);
  EXPECT_EQ(r.expected_shape_count, 6);
  EXPECT_EQ(r.holomorphic_dimension, 1);
  EXPECT_TRUE(r.vandermonde_match);
  EXPECT_TRUE(r.determinant_match);
  EXPECT_EQ(r.shape_degrees, (std::vector<int>{2, 3, 3, 3, 3, 4}));
  ASSERT_EQ(r.shapes.size(), 6u);
  // No single shape is holomorphic; only a combination of the cubic ones.
  for (const auto& s : r.shapes) EXPECT_FALSE(s.holomorphic);
}

TEST(Laughlin, HolomorphicPartOfGeneralSpans) {
  // span{w1 - w2, wbar1 - wbar2}: holomorphic part is one-dimensional.
  const auto hol = holomorphic_subspace({w(1) - w(2), wbar(1) - wbar(2)}, 2);
  ASSERT_EQ(hol.size(), 1u);
  EXPECT_TRUE(proportional(hol[0], w(1) - w(2)));
}

}  // namespace
}  // namespace bargmann
