#pragma once

// Centre-of-mass / relative-motion separation for two particles.
//
// Per axis, C = a1 + a2 and R = a1 - a2. Polynomials in these coordinates
// reuse the VariableId layout: particle slot 1 holds C, slot 2 holds R.
// Antisymmetric states are odd in R, and a pure relative-motion state is a
// polynomial in R alone:
//
//   P R_t + Q R_u + S R_v + T R_t R_u R_v
//
// with P, Q, S, T functions of the squares R_t^2, R_u^2, R_v^2.

#include <optional>
#include <string>
#include <vector>

#include "bargmann/multiplets.hpp"
#include "bargmann/polynomial.hpp"
#include "bargmann/shapes.hpp"
#include "bargmann/text_format.hpp"

namespace bargmann {

/// Names C_t, C_u, C_v, R_t, ... (x<a> beyond three axes).
VariableNamer cm_rm_names();

/// Substitutes a1 = (C + R)/2, a2 = (C - R)/2. Throws std::invalid_argument
/// when p mentions a particle other than 1 and 2.
Polynomial cm_rm_substitute(const Polynomial& p);

/// Inverse of cm_rm_substitute: C = a1 + a2, R = a1 - a2.
Polynomial cm_rm_restore(const Polynomial& q);

/// True when the CM/RM form contains no C variable.
bool is_pure_rm(const Polynomial& p);

/// Relative-motion form of an odd pure-RM state. Each slot is a polynomial
/// in the R variables with even exponents only: p_slot[a] multiplies R_a and
/// p_triple multiplies R_t R_u R_v. A term odd in exactly one variable goes
/// to the slot of that variable.
struct RmForm {
  std::vector<Polynomial> linear;  // one slot per axis (P, Q, R)
  Polynomial triple;               // S

  /// P R_t + Q R_u + R R_v + S R_t R_u R_v, in CM/RM variables.
  Polynomial assemble() const;
};

/// Throws std::invalid_argument unless p is pure RM and odd under R -> -R.
RmForm rm_form(const Polynomial& p);

/// (a1 - a2)^2 = e1(a)^2 - 4 e2(a), the relative-motion boson of one axis.
Polynomial relative_discriminant(int axis);

struct RmQuanta {
  int total_quanta = 0;  // n
  int l = 0;
  int n_r = 0;  // n = 2 n_r + l
};

/// Radial quanta of a pure-RM multiplet. Throws std::invalid_argument when
/// the multiplet is not pure RM and std::logic_error when n - l is odd.
RmQuanta rm_quanta(const Multiplet& multiplet);

enum class Band { kVibrational, kRotational };
std::string to_string(Band band);

struct BandAssignment {
  Band band = Band::kVibrational;
  std::vector<int> phi_support;  // 1-based indices of the nonzero Phi_i
};

/// Rotational when the decomposition over the N = 2, d = 3 shape basis has a
/// nonzero coefficient on the pseudoscalar shape (the one from shell 2),
/// vibrational otherwise.
BandAssignment band_assign(const Polynomial& p, const ShapeBasis& basis);

/// Band of a whole multiplet: rotational when any member carries the
/// pseudoscalar. The multiplet shares one band even though its top state may
/// not carry it (e.g. Psi11^3 has m = 3, which Psi4 cannot reach).
BandAssignment band_assign(const Multiplet& multiplet, const ShapeBasis& basis);

}  // namespace bargmann
