#pragma once

// Seeded generators and independent reference computations shared by the
// test binaries.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "bargmann/fock.hpp"
#include "bargmann/operators.hpp"
#include "bargmann/polynomial.hpp"
#include "bargmann/text_format.hpp"

namespace bargmann::testing {

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational() {
    const long num = integer(-5, 5);
    const long den = integer(1, 4);
    return Rational(num, den);
  }

  GaussianRational scalar() { return GaussianRational(rational(), integer(0, 2) == 0 ? rational() : Rational(0)); }

  GaussianRational nonzero_scalar() {
    GaussianRational c;
    while (c.is_zero()) c = scalar();
    return c;
  }

  Monomial monomial(int particles, int dims, int degree) {
    Monomial m;
    for (int k = 0; k < degree; ++k) {
      m = m * Monomial::of(VariableId{integer(0, dims - 1), integer(1, particles)});
    }
    return m;
  }

  /// Up to `terms` random terms of degree <= max_degree.
  Polynomial polynomial(int particles, int dims, int max_degree, int terms = 4) {
    Polynomial p;
    const int n = integer(1, terms);
    for (int k = 0; k < n; ++k) p.add_term(monomial(particles, dims, integer(0, max_degree)), scalar());
    return p;
  }

  Polynomial homogeneous(int particles, int dims, int degree, int terms = 4) {
    Polynomial p;
    const int n = integer(1, terms);
    for (int k = 0; k < n; ++k) p.add_term(monomial(particles, dims, degree), scalar());
    return p;
  }

 private:
  std::mt19937 rng_;
};

/// sum over permutations of sign(sigma) * sigma(p).
inline Polynomial antisymmetrize(const Polynomial& p, int particles) {
  std::vector<int> images(static_cast<std::size_t>(particles));
  std::iota(images.begin(), images.end(), 1);
  Polynomial out;
  do {
    const Permutation sigma = Permutation::from_images(images);
    out += apply_permutation(p, sigma) * GaussianRational(sigma.sign());
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

/// Reference scalar product: <p, q> = [conj(p)(d/da) q] at a = 0, computed by
/// differentiation instead of factorial weights.
inline GaussianRational derivative_inner_product(const Polynomial& p, const Polynomial& q) {
  GaussianRational out;
  for (const auto& [m, c] : p.terms()) {
    Polynomial r = q;
    for (const auto& [v, e] : m.factors()) {
      for (int k = 0; k < e; ++k) r = differentiate(r, v);
    }
    out += c.conj() * r.coefficient(Monomial());
  }
  return out;
}

/// Reference shell dimension: distinct single-particle states on levels n
/// with binom(n+d-1, d-1) states each; count N-subsets with total level E
/// by a generating-function sweep over levels.
inline long long level_occupation_count(int particles, int dims, int energy) {
  auto binom = [](long long n, long long k) {
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  // ways[k][e]: choose k states with total energy e among levels seen so far.
  std::vector<std::vector<long long>> ways(static_cast<std::size_t>(particles) + 1,
                                           std::vector<long long>(static_cast<std::size_t>(energy) + 1, 0));
  ways[0][0] = 1;
  for (int level = 0; level <= energy; ++level) {
    const long long g = binom(level + dims - 1, dims - 1);
    auto next = ways;
    for (int k = 0; k <= particles; ++k) {
      for (int e = 0; e <= energy; ++e) {
        if (ways[static_cast<std::size_t>(k)][static_cast<std::size_t>(e)] == 0) continue;
        for (int take = 1; k + take <= particles && e + take * level <= energy && take <= g; ++take) {
          next[static_cast<std::size_t>(k + take)][static_cast<std::size_t>(e + take * level)] +=
              ways[static_cast<std::size_t>(k)][static_cast<std::size_t>(e)] * binom(g, take);
        }
      }
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(particles)][static_cast<std::size_t>(energy)];
}

/// Cartesian vector helpers for N = 2, d = 3, written out independently of
/// the library's spherical helpers.
inline Polynomial var(int axis, int particle) { return Polynomial::variable(axis, particle); }

inline Polynomial sum_component(int axis) { return var(axis, 1) + var(axis, 2); }
inline Polynomial diff_component(int axis) { return var(axis, 1) - var(axis, 2); }

/// m = +1, 0, -1 spherical combination of a Cartesian triple, by hand.
inline Polynomial spherical(const Polynomial& x, const Polynomial& y, const Polynomial& z, int m) {
  const GaussianRational i(Rational(0), Rational(1));
  if (m == 1) return (x + y * i) * GaussianRational(-1);
  if (m == 0) return z;
  return x - y * i;
}

inline Polynomial ref_e1(int m) { return spherical(sum_component(0), sum_component(1), sum_component(2), m); }
inline Polynomial ref_psi1(int m) { return spherical(diff_component(0), diff_component(1), diff_component(2), m); }

/// Reference L_z = -i sum_j (t_j d/du_j - u_j d/dt_j).
inline Polynomial ref_lz(const Polynomial& p, int particles) {
  Polynomial out;
  for (int j = 1; j <= particles; ++j) {
    out += var(0, j) * differentiate(p, VariableId{1, j}) - var(1, j) * differentiate(p, VariableId{0, j});
  }
  return out * GaussianRational(Rational(0), Rational(-1));
}

}  // namespace bargmann::testing

namespace bargmann {

// Readable gtest failure messages.
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << format_polynomial(p); }
inline void PrintTo(const GaussianRational& c, std::ostream* os) { *os << format_polynomial(Polynomial(c)); }

}  // namespace bargmann
