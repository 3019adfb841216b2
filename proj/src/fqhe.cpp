#include "bargmann/fqhe.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bargmann/linalg.hpp"
#include "bargmann/operators.hpp"
#include "bargmann/shapes.hpp"

namespace bargmann {

namespace {

constexpr int kPlanarShells = 2;  // N = 3, d = 2 shapes live in shells 0..2

void require_planar(const Polynomial& p, int dims, const char* who) {
  if (dims != 2 || p.max_axis() > 1) throw std::invalid_argument(std::string(who) + ": requires d = 2");
}

}  // namespace

Polynomial HolomorphicFrame::w(int particle) {
  return Polynomial::variable(0, particle) + Polynomial::variable(1, particle) * GaussianRational::i();
}

Polynomial HolomorphicFrame::wbar(int particle) {
  return Polynomial::variable(0, particle) - Polynomial::variable(1, particle) * GaussianRational::i();
}

Polynomial HolomorphicFrame::to_frame(const Polynomial& p) const {
  require_planar(p, 2, "HolomorphicFrame::to_frame");
  const GaussianRational half(Rational(1, 2));
  const GaussianRational minus_half_i(Rational(0), Rational(-1, 2));  // 1/(2i)
  return substitute(p, [&](VariableId v) {
    const Polynomial z = Polynomial::variable(0, v.particle);
    const Polynomial zbar = Polynomial::variable(1, v.particle);
    return v.axis == 0 ? (z + zbar) * half : (z - zbar) * minus_half_i;
  });
}

Polynomial HolomorphicFrame::from_frame(const Polynomial& q) const {
  require_planar(q, 2, "HolomorphicFrame::from_frame");
  return substitute(q, [](VariableId v) { return v.axis == 0 ? w(v.particle) : wbar(v.particle); });
}

Polynomial dbar(const Polynomial& p, int particle, int dims) {
  require_planar(p, dims, "dbar");
  const Polynomial dt = differentiate(p, VariableId{0, particle});
  const Polynomial du = differentiate(p, VariableId{1, particle});
  return (dt + du * GaussianRational::i()) * GaussianRational(Rational(1, 2));
}

bool is_holomorphic(const Polynomial& p, int particles) {
  for (int j = 1; j <= particles; ++j) {
    if (!dbar(p, j).is_zero()) return false;
  }
  return true;
}

Polynomial vandermonde_product(int particles) {
  Polynomial out(1);
  for (int i = 1; i <= particles; ++i) {
    for (int j = i + 1; j <= particles; ++j) out = out * (HolomorphicFrame::w(i) - HolomorphicFrame::w(j));
  }
  return out;
}

Polynomial vandermonde_determinant(int particles) {
  std::vector<int> perm(static_cast<std::size_t>(particles));
  std::iota(perm.begin(), perm.end(), 1);
  Polynomial out;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a) {
      for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b];
    }
    Polynomial term(inversions % 2 == 0 ? 1 : -1);
    for (int k = 0; k < particles; ++k) term = term * pow(HolomorphicFrame::w(perm[static_cast<std::size_t>(k)]), k);
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<Polynomial> holomorphic_subspace(const std::vector<Polynomial>& polys, int particles) {
  // Stack the dbar images of all particles into one polynomial per input by
  // tagging particle j's image with a spare variable.
  std::vector<Polynomial> image;
  for (const auto& p : polys) {
    Polynomial stacked;
    for (int j = 1; j <= particles; ++j) stacked += dbar(p, j) * Polynomial::variable(2, j);
    image.push_back(std::move(stacked));
  }
  return preimage_kernel(polys, image);
}

Polynomial holomorphic_shape() {
  const ShapeBasis basis = full_shape_basis(3, 2, kPlanarShells);
  std::vector<Polynomial> cubic;
  for (const auto& s : basis.shapes) {
    if (s.degree == 3) cubic.push_back(s.polynomial);
  }
  const auto hol = holomorphic_subspace(cubic, 3);
  if (hol.size() != 1) {
    throw std::logic_error("holomorphic_shape: holomorphic subspace has dimension " + std::to_string(hol.size()));
  }
  return canonical_form(hol.front());
}

LaughlinReport laughlin_report() {
  const ShapeBasis basis = full_shape_basis(3, 2, kPlanarShells);
  LaughlinReport out;
  out.shape_count = static_cast<long long>(basis.shapes.size());
  out.expected_shape_count = basis.expected_count();

  std::vector<Polynomial> cubic;
  for (std::size_t i = 0; i < basis.shapes.size(); ++i) {
    const Shape& s = basis.shapes[i];
    out.shapes.push_back({static_cast<int>(i) + 1, s.shell, s.degree, is_holomorphic(s.polynomial, 3)});
    out.shape_degrees.push_back(s.degree);
    if (s.degree == 3) cubic.push_back(s.polynomial);
  }
  std::sort(out.shape_degrees.begin(), out.shape_degrees.end());

  const auto hol = holomorphic_subspace(cubic, 3);
  out.holomorphic_dimension = static_cast<int>(hol.size());
  out.vandermonde = canonical_form(vandermonde_product(3));
  if (hol.size() == 1) {
    out.holomorphic_generator = canonical_form(hol.front());
    out.vandermonde_match = out.holomorphic_generator == out.vandermonde;
    out.determinant_match = canonical_form(vandermonde_determinant(3)) == out.holomorphic_generator;
  }
  return out;
}

}  // namespace bargmann
