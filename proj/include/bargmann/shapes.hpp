#pragma once

// Shapes: the antisymmetric states orthogonal to everything that contains an
// Euler boson. They generate all antisymmetric wave functions as a free
// module over the symmetric polynomials,
//
//   Psi = sum_i Phi_i Psi_i,   i = 1..N!^(d-1),
//
// with symmetric coefficients Phi_i.

#include <optional>
#include <stdexcept>
#include <vector>

#include "bargmann/fock.hpp"
#include "bargmann/polynomial.hpp"

namespace bargmann {

struct Shape {
  Polynomial polynomial;  // canonical form
  int shell = 0;
  int degree = 0;
  std::optional<std::vector<int>> axis_degrees;  // set when multihomogeneous
  Rational norm_sq;
};

struct ShapeBasis {
  int particles = 0;
  int dims = 0;
  int max_shell = 0;
  std::vector<Shape> shapes;

  long long expected_count() const { return shape_count(particles, dims); }
  bool complete() const { return static_cast<long long>(shapes.size()) == expected_count(); }
};

class IncompleteBasisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when the free-module system is inconsistent or underdetermined,
/// which indicates a bug rather than bad input.
class DecompositionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Spanning set {b * psi}: b a nonconstant Euler-boson monomial of degree k,
/// psi a Slater state k quanta lower. May be linearly dependent.
std::vector<Polynomial> euler_excited_subspace(const ShellSpec& spec);

/// Orthogonal basis of the complement of euler_excited_subspace inside the
/// shell, each vector in canonical form, ordered by leading monomial.
std::vector<Shape> shape_subspace(const ShellSpec& spec);

/// Shapes of shells 0..max_shell; check complete() for the N!^(d-1) count.
ShapeBasis full_shape_basis(int particles, int dims, int max_shell);

/// Adds shells until the basis is complete; throws IncompleteBasisError when
/// shell_limit is reached first.
ShapeBasis complete_shape_basis(int particles, int dims, int shell_limit = 12);

struct ModuleDecomposition {
  std::vector<Polynomial> coefficients;  // Phi_i, aligned with the basis

  /// 1-based indices of the nonzero Phi_i.
  std::vector<int> support() const;
};

/// Solves p = sum_i Phi_i Psi_i exactly with symmetric Phi_i built from
/// Euler-boson monomials of the degree forced by the grading.
/// Throws std::invalid_argument when p is not antisymmetric,
/// IncompleteBasisError for an incomplete basis and DecompositionError when
/// the system has no unique solution.
ModuleDecomposition decompose(const Polynomial& p, const ShapeBasis& basis);

/// sum_i Phi_i Psi_i
Polynomial reconstruct(const ModuleDecomposition& decomposition, const ShapeBasis& basis);

}  // namespace bargmann
