#pragma once

// Linear operators on Bargmann-space polynomials.
//
// Operators are kept as formal sums of generator products rather than
// matrices; matrices only appear inside subspace computations. The angular
// momentum components have the same form as in real space with (x,y,z)
// replaced by (t,u,v):
//
//   L_v = -i (t d/du - u d/dt)   and cyclically,
//
// summed over particles for the total operator. Ladder operators carry no
// normalization: lowering the projection of an unnormalized state multiplies
// it by (l + m) instead of the usual square root.

#include <optional>
#include <vector>

#include "bargmann/polynomial.hpp"

namespace bargmann {

Polynomial differentiate(const Polynomial& p, VariableId v);
Polynomial multiply_by_variable(const Polynomial& p, VariableId v);

struct Generator {
  enum class Kind { kMultiply, kDifferentiate };
  Kind kind;
  VariableId variable;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// coefficient * factors[0] * factors[1] * ... ; the rightmost factor acts first.
struct OperatorTerm {
  GaussianRational coefficient;
  std::vector<Generator> factors;
};

class LinearOperator {
 public:
  LinearOperator() = default;  // the zero operator

  static LinearOperator identity();
  static LinearOperator scalar(const GaussianRational& c);
  static LinearOperator multiply(VariableId v);
  static LinearOperator derivative(VariableId v);

  const std::vector<OperatorTerm>& terms() const { return terms_; }

  Polynomial apply(const Polynomial& p) const;
  Polynomial operator()(const Polynomial& p) const { return apply(p); }

  LinearOperator& operator+=(const LinearOperator& o);
  LinearOperator& operator-=(const LinearOperator& o);
  LinearOperator& operator*=(const GaussianRational& c);

  friend LinearOperator operator+(LinearOperator a, const LinearOperator& b) { return a += b; }
  friend LinearOperator operator-(LinearOperator a, const LinearOperator& b) { return a -= b; }
  friend LinearOperator operator*(LinearOperator a, const GaussianRational& c) { return a *= c; }
  friend LinearOperator operator*(const GaussianRational& c, LinearOperator a) { return a *= c; }
  /// Composition: (a * b)(p) = a(b(p)).
  friend LinearOperator operator*(const LinearOperator& a, const LinearOperator& b);

 private:
  std::vector<OperatorTerm> terms_;
};

/// [a, b] = ab - ba
LinearOperator commutator(const LinearOperator& a, const LinearOperator& b);

/// Angular momentum component along `axis` (0 = t/x, 1 = u/y, 2 = v/z) for one
/// particle, or summed over all `particles` when `particle` is empty.
/// Requires dims == 3.
LinearOperator angular_momentum(int axis, int particles, std::optional<int> particle = std::nullopt,
                                int dims = 3);

/// L_z, the v-component of the total angular momentum.
LinearOperator lz(int particles, int dims = 3);

enum class LadderDirection { kRaise, kLower };

/// L+ = L_t + i L_u, L- = L_t - i L_u (total, unnormalized). Requires dims == 3.
LinearOperator ladder(LadderDirection direction, int particles, int dims = 3);

/// L^2 realized as L- L+ + Lz^2 + Lz.
LinearOperator casimir(int particles, int dims = 3);

/// Bijection of particle labels 1..N.
class Permutation {
 public:
  static Permutation identity(int particles);
  static Permutation transposition(int particles, int i, int j);
  /// images[k] is the image of particle k+1; must be a bijection of 1..N.
  static Permutation from_images(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int particle) const;
  int sign() const;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

/// Relabels particle j as sigma(j) in every variable.
Polynomial apply_permutation(const Polynomial& p, const Permutation& sigma);

/// True iff every transposition of 1..particles maps p to -p.
bool is_antisymmetric(const Polynomial& p, int particles);
/// Uses the largest particle index occurring in p.
bool is_antisymmetric(const Polynomial& p);

/// True iff every transposition of 1..particles leaves p unchanged.
bool is_symmetric(const Polynomial& p, int particles);

}  // namespace bargmann
