#pragma once

// Antisymmetric shell bases (Slater determinants of Bargmann monomials) and
// the symmetric side: elementary symmetric polynomials ("Euler bosons"),
// their spherical combinations, and two-particle discriminants.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bargmann/polynomial.hpp"

namespace bargmann {

/// Smallest total degree of a nonzero antisymmetric polynomial of N particles
/// in d dimensions: fill single-particle levels n = 0, 1, ... (each holding
/// binom(n+d-1, d-1) states) from the bottom.
int minimal_degree(int particles, int dims);

/// D = N!^(d-1), the number of shapes.
long long shape_count(int particles, int dims);

struct ShellSpec {
  int particles = 2;
  int dims = 3;
  int shell = 0;

  int total_degree() const { return minimal_degree(particles, dims) + shell; }
  /// Throws std::invalid_argument unless N >= 1, d >= 1, shell >= 0.
  void validate() const;
};

/// Exponent vector of a single-particle monomial, one entry per axis.
using Orbital = std::vector<int>;

/// Graded lexicographic order on orbitals, largest first.
bool orbital_precedes(const Orbital& a, const Orbital& b);

struct SlaterState {
  std::vector<Orbital> occupied;  // strictly decreasing in orbital order
  Polynomial polynomial;          // det[ orbital_k(particle j) ]
  int degree = 0;
};

/// Expands the Slater determinant of `occupied` (row k = orbital k, column j
/// = particle j).
Polynomial slater_determinant(const std::vector<Orbital>& occupied);

/// Linearly independent antisymmetric basis of the shell, ordered
/// lexicographically by occupied orbitals.
std::vector<SlaterState> slater_basis(const ShellSpec& spec);

/// Number of states slater_basis would return, computed without expanding
/// any determinant.
long long shell_dimension(const ShellSpec& spec);

/// e_k in the N variables of one axis.
Polynomial elementary_symmetric(int axis, int k, int particles);

/// e_{1m}: m=1 -> -e1(t) - i e1(u), m=0 -> e1(v), m=-1 -> e1(t) - i e1(u).
/// The m=-1 convention mirrors the ground-state spherical components.
Polynomial spherical_boson(int m, int particles, int dims = 3);

/// Spherical component m of a Cartesian vector (x, y, z) of polynomials:
/// +1 -> -x - i y, 0 -> z, -1 -> x - i y.
Polynomial spherical_component(const Polynomial& x, const Polynomial& y, const Polynomial& z,
                               int m);

/// a_1 - a_2 for N = 2: the ground-state shapes Psi_1, Psi_2, Psi_3.
Polynomial particle_difference(int axis);

/// Psi_{1m} = spherical component m of (Psi_1, Psi_2, Psi_3), N = 2, d = 3.
Polynomial spherical_ground(int m);

/// Product of powers of generators e_k(axis).
struct EulerBosonMonomial {
  std::map<std::pair<int, int>, int> powers;  // (axis, k) -> exponent
  int degree = 0;
  Polynomial polynomial;

  /// e.g. "e1(t)^2*e2(u)"; "1" for the empty product.
  std::string label(int dims = 3) const;
};

/// All generator products of total degree `degree` (degree 0 gives {1}).
std::vector<EulerBosonMonomial> euler_monomials(int particles, int dims, int degree);

/// All generator products whose degree along each axis is axis_degrees[axis].
std::vector<EulerBosonMonomial> euler_monomials_with_axis_degrees(int particles,
                                                                  const std::vector<int>& axis_degrees);

/// (a_1 - a_2)^2 for one axis; requires N = 2.
Polynomial discriminant(int axis, int particles = 2);

}  // namespace bargmann
