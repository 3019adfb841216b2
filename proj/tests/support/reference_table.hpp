#pragma once

// The m >= 1 states of the second shell (two particles, three dimensions)
// with their squared norms, built from hand-written spherical components.

#include <vector>

#include "support/generators.hpp"

namespace bargmann::testing {

struct ReferenceState {
  const char* name;
  Polynomial poly;
  long norm_sq;
};

inline std::vector<ReferenceState> reference_table() {
  const Polynomial e11 = ref_e1(1), e10 = ref_e1(0), e1m = ref_e1(-1);
  const Polynomial p11 = ref_psi1(1), p10 = ref_psi1(0), p1m = ref_psi1(-1);
  const GaussianRational two(2), four(4), eight(8), minus_two(-2);
  return {
      {"233-I", e11 * e11 * p11, 128},
      {"232-I", e11 * e10 * p11 * two + e11 * e11 * p10, 192},
      {"231-I", (e10 * e10 * two + e11 * e1m) * p11 * two + e11 * e10 * p10 * eight + e11 * e11 * p1m, 1920},
      {"233-II", p11 * p11 * p11, 384},
      {"232-II", p11 * p11 * p10, 64},
      {"231-II", p10 * p10 * p11 * four + p11 * p11 * p1m, 640},
      {"222", e11 * e10 * p11 - e11 * e11 * p10, 96},
      {"221", (e10 * e10 * two + e11 * e1m) * p11 - e11 * e10 * p10 * two - e11 * e11 * p1m, 384},
      {"211-I", p10 * p10 * p11 - p11 * p11 * p1m, 160},
      {"211-II", (e10 * e10 * minus_two + e11 * e1m) * p11 + e11 * e10 * p10 * two - e11 * e11 * p1m, 384},
      {"211-III", (e10 * e10 - e11 * e1m * two) * p11 + e11 * e10 * p10 * two - e11 * e11 * p1m, 480},
  };
}

}  // namespace bargmann::testing
