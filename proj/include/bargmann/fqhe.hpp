#pragma once

// The three-particle planar check: among the shapes of N = 3, d = 2 exactly
// one combination depends on the complex coordinates w_j = t_j + i u_j alone,
// and it is the Vandermonde product (w1 - w2)(w1 - w3)(w2 - w3).
//
// The opposite convention w = t - i u swaps the roles of w and its conjugate;
// the dimension count and the match are unaffected up to conjugation.

#include <string>
#include <vector>

#include "bargmann/polynomial.hpp"

namespace bargmann {

/// Complex coordinates of a planar system. In frame polynomials, axis 0 of
/// particle j holds w_j and axis 1 holds its conjugate wbar_j.
struct HolomorphicFrame {
  int particles = 3;

  /// t_j = (w_j + wbar_j)/2, u_j = (w_j - wbar_j)/(2i). Requires d = 2.
  Polynomial to_frame(const Polynomial& p) const;
  /// w_j = t_j + i u_j, wbar_j = t_j - i u_j.
  Polynomial from_frame(const Polynomial& q) const;

  /// w_j and wbar_j as t, u polynomials.
  static Polynomial w(int particle);
  static Polynomial wbar(int particle);
};

/// (d/dt_j + i d/du_j)/2. Throws std::invalid_argument unless dims == 2 and p
/// has no axis beyond u.
Polynomial dbar(const Polynomial& p, int particle, int dims = 2);

/// True when dbar(p, j) vanishes for every particle j of p.
bool is_holomorphic(const Polynomial& p, int particles);

/// prod_{i<j} (w_i - w_j) in t, u variables.
Polynomial vandermonde_product(int particles);
/// det[w_j^k], rows k = 0..N-1, columns j = 1..N, expanded.
Polynomial vandermonde_determinant(int particles);

/// Basis of the holomorphic part of span(polys).
std::vector<Polynomial> holomorphic_subspace(const std::vector<Polynomial>& polys, int particles);

/// Canonical generator of the holomorphic part of the degree-3 shape span of
/// N = 3, d = 2. Throws std::logic_error unless that part is one-dimensional.
Polynomial holomorphic_shape();

struct ShapeHolomorphy {
  int index = 0;  // 1-based
  int shell = 0;
  int degree = 0;
  bool holomorphic = false;
};

struct LaughlinReport {
  long long shape_count = 0;
  long long expected_shape_count = 0;
  std::vector<ShapeHolomorphy> shapes;
  std::vector<int> shape_degrees;
  int holomorphic_dimension = 0;
  Polynomial holomorphic_generator;  // zero unless the dimension is 1
  Polynomial vandermonde;            // canonical form of the product
  bool vandermonde_match = false;
  bool determinant_match = false;
};

LaughlinReport laughlin_report();

}  // namespace bargmann
