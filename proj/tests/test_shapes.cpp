#include <gtest/gtest.h>

#include "bargmann/linalg.hpp"
#include "bargmann/operators.hpp"
#include "bargmann/shapes.hpp"
#include "support/generators.hpp"

namespace bargmann {
namespace {

using testing::diff_component;
using testing::Gen;
using testing::var;

TEST(Shapes, TwoParticlesInThreeDimensions) {
  EXPECT_EQ(shape_subspace({2, 3, 0}).size(), 3u);
  EXPECT_TRUE(shape_subspace({2, 3, 1}).empty());
  const auto shell2 = shape_subspace({2, 3, 2});
  ASSERT_EQ(shell2.size(), 1u);
  const Polynomial psi4 = diff_component(0) * diff_component(1) * diff_component(2);
  EXPECT_EQ(shell2[0].polynomial, psi4);
  EXPECT_EQ(shell2[0].norm_sq, Rational(8));

  const ShapeBasis basis = complete_shape_basis(2, 3);
  ASSERT_TRUE(basis.complete());
  ASSERT_EQ(basis.shapes.size(), 4u);
  for (int a = 0; a < 3; ++a) {
    EXPECT_EQ(basis.shapes[static_cast<std::size_t>(a)].polynomial, diff_component(a));
    EXPECT_EQ(basis.shapes[static_cast<std::size_t>(a)].norm_sq, Rational(2));
  }
  EXPECT_EQ(basis.shapes[3].polynomial, psi4);
  EXPECT_EQ(basis.max_shell, 2);
}

TEST(Shapes, ThreeParticlesInThePlane) {
  const ShapeBasis basis = full_shape_basis(3, 2, 2);
  ASSERT_EQ(basis.shapes.size(), 6u);
  EXPECT_TRUE(basis.complete());
  std::vector<int> degrees;
  for (const auto& s : basis.shapes) {
    degrees.push_back(s.degree);
    EXPECT_TRUE(is_antisymmetric(s.polynomial, 3));
  }
  std::sort(degrees.begin(), degrees.end());
  EXPECT_EQ(degrees, (std::vector<int>{2, 3, 3, 3, 3, 4}));
}

TEST(Shapes, OneDimensionHasTheVandermondeOnly) {
  const ShapeBasis basis = complete_shape_basis(2, 1);
  ASSERT_EQ(basis.shapes.size(), 1u);
  EXPECT_EQ(basis.shapes[0].polynomial, var(0, 1) - var(0, 2));
  const ShapeBasis three = complete_shape_basis(3, 1);
  ASSERT_EQ(three.shapes.size(), 1u);
  EXPECT_EQ(three.shapes[0].degree, 3);
}

TEST(Shapes, OrthogonalToEulerExcitedStates) {
  for (const ShellSpec spec : {ShellSpec{2, 3, 2}, ShellSpec{3, 2, 1}, ShellSpec{3, 2, 2}}) {
    const auto excited = euler_excited_subspace(spec);
    const auto shapes = shape_subspace(spec);
    for (const auto& s : shapes) {
      for (const auto& x : excited) EXPECT_TRUE(inner_product(x, s.polynomial).is_zero());
      EXPECT_EQ(canonical_form(s.polynomial), s.polynomial);
    }
    for (std::size_t a = 0; a < shapes.size(); ++a) {
      for (std::size_t b = a + 1; b < shapes.size(); ++b) {
        EXPECT_TRUE(inner_product(shapes[a].polynomial, shapes[b].polynomial).is_zero());
      }
    }
    // Shapes plus the excited span fill the shell.
    std::vector<Polynomial> all = excited;
    for (const auto& s : shapes) all.push_back(s.polynomial);
    EXPECT_EQ(static_cast<long long>(span_rank(all)), shell_dimension(spec));
  }
}

TEST(Shapes, IncompleteBasisIsReported) {
  EXPECT_FALSE(full_shape_basis(2, 3, 1).complete());
  EXPECT_THROW(complete_shape_basis(2, 3, 1), IncompleteBasisError);
  const ShapeBasis partial = full_shape_basis(2, 3, 1);
  EXPECT_THROW(decompose(diff_component(0), partial), IncompleteBasisError);
}

TEST(Decompose, GroundStatesAndPseudoscalar) {
  const ShapeBasis basis = complete_shape_basis(2, 3);
  const Polynomial psi4 = diff_component(0) * diff_component(1) * diff_component(2);
  const ModuleDecomposition dec = decompose(psi4, basis);
  EXPECT_EQ(dec.support(), (std::vector<int>{4}));
  EXPECT_EQ(dec.coefficients[3], Polynomial(1));

  // e1(t) Psi_2 - 3 Psi_1 has Phi = (-3, e1(t), 0, 0)
  const Polynomial e1t = var(0, 1) + var(0, 2);
  const Polynomial p = e1t * diff_component(1) - diff_component(0) * GaussianRational(3);
  const ModuleDecomposition d2 = decompose(p, basis);
  EXPECT_EQ(d2.coefficients[0], Polynomial(-3));
  EXPECT_EQ(d2.coefficients[1], e1t);
  EXPECT_EQ(d2.support(), (std::vector<int>{1, 2}));
}

TEST(Decompose, RejectsNonAntisymmetricInput) {
  const ShapeBasis basis = complete_shape_basis(2, 3);
  EXPECT_THROW(decompose(var(0, 1), basis), std::invalid_argument);
}

void check_random_decompositions(int particles, int dims, unsigned seed, int cases) {
  const ShapeBasis basis = complete_shape_basis(particles, dims);
  Gen g(seed);
  int done = 0;
  while (done < cases) {
    const Polynomial p = testing::antisymmetrize(g.polynomial(particles, dims, 5, 5), particles);
    if (p.is_zero()) continue;
    const ModuleDecomposition dec = decompose(p, basis);
    for (const auto& phi : dec.coefficients) EXPECT_TRUE(is_symmetric(phi, particles));
    EXPECT_EQ(reconstruct(dec, basis), p);
    ++done;
  }
}

TEST(Decompose, RandomStatesReconstructTwoParticles) { check_random_decompositions(2, 3, 101, 60); }
TEST(Decompose, RandomStatesReconstructThreeParticles) { check_random_decompositions(3, 2, 102, 25); }
TEST(Decompose, RandomStatesReconstructOneDimension) { check_random_decompositions(3, 1, 103, 20); }

TEST(Decompose, UniquenessAgainstAnIndependentBasis) {
  // Build p from chosen symmetric coefficients and recover them exactly.
  const ShapeBasis basis = complete_shape_basis(2, 3);
  Gen g(104);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> phi;
    Polynomial p;
    for (std::size_t i = 0; i < basis.shapes.size(); ++i) {
      Polynomial s;
      for (const auto& b : euler_monomials(2, 3, g.integer(0, 2))) {
        if (g.integer(0, 2) == 0) s += b.polynomial * g.scalar();
      }
      phi.push_back(s);
      p += s * basis.shapes[i].polynomial;
    }
    if (p.is_zero()) continue;
    EXPECT_EQ(decompose(p, basis).coefficients, phi);
  }
}

}  // namespace
}  // namespace bargmann
