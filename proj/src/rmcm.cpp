#include "bargmann/rmcm.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "bargmann/fock.hpp"

namespace bargmann {

namespace {

constexpr int kCentre = 1;
constexpr int kRelative = 2;

void require_two_particles(const Polynomial& p, const char* who) {
  if (p.max_particle() > 2) throw std::invalid_argument(std::string(who) + ": requires N = 2");
}

// Index of the pseudoscalar shape: the only N = 2, d = 3 shape above shell 0.
std::size_t pseudoscalar_index(const ShapeBasis& basis) {
  if (basis.particles != 2 || basis.dims != 3) {
    throw std::invalid_argument("band_assign: bands are defined for N = 2, d = 3");
  }
  for (std::size_t i = 0; i < basis.shapes.size(); ++i) {
    if (basis.shapes[i].shell > 0) return i;
  }
  throw IncompleteBasisError("band_assign: basis lacks the pseudoscalar shape");
}

}  // namespace

VariableNamer cm_rm_names() {
  return [](VariableId v) {
    const std::string axis = v.axis < 3 ? std::string(1, "tuv"[v.axis]) : "x" + std::to_string(v.axis);
    return (v.particle == kCentre ? "C_" : "R_") + axis;
  };
}

Polynomial cm_rm_substitute(const Polynomial& p) {
  require_two_particles(p, "cm_rm_substitute");
  const GaussianRational half(Rational(1, 2));
  return substitute(p, [&](VariableId v) {
    const Polynomial c = Polynomial::variable(v.axis, kCentre);
    const Polynomial r = Polynomial::variable(v.axis, kRelative);
    return v.particle == 1 ? (c + r) * half : (c - r) * half;
  });
}

Polynomial cm_rm_restore(const Polynomial& q) {
  require_two_particles(q, "cm_rm_restore");
  return substitute(q, [](VariableId v) {
    const Polynomial a1 = Polynomial::variable(v.axis, 1);
    const Polynomial a2 = Polynomial::variable(v.axis, 2);
    return v.particle == kCentre ? a1 + a2 : a1 - a2;
  });
}

bool is_pure_rm(const Polynomial& p) {
  const Polynomial q = cm_rm_substitute(p);
  for (const auto& [m, c] : q.terms()) {
    for (const auto& [v, e] : m.factors()) {
      if (v.particle == kCentre) return false;
    }
  }
  return true;
}

Polynomial RmForm::assemble() const {
  Polynomial out;
  Polynomial cube(1);
  for (std::size_t a = 0; a < linear.size(); ++a) {
    const Polynomial r = Polynomial::variable(static_cast<int>(a), kRelative);
    out += linear[a] * r;
    cube = cube * r;
  }
  return out + triple * cube;
}

RmForm rm_form(const Polynomial& p) {
  if (!is_pure_rm(p)) throw std::invalid_argument("rm_form: state contains centre-of-mass motion");
  const Polynomial q = cm_rm_substitute(p);
  const int dims = std::max(3, q.max_axis() + 1);
  if (dims != 3) throw std::invalid_argument("rm_form: requires d = 3");

  RmForm form;
  form.linear.assign(3, Polynomial{});
  for (const auto& [m, c] : q.terms()) {
    std::vector<int> odd;
    std::vector<Monomial::Factor> rest;
    for (const auto& [v, e] : m.factors()) {
      if (e % 2 == 1) odd.push_back(v.axis);
      if (e / 2 > 0) rest.push_back({v, e - e % 2});
    }
    const Monomial even(std::move(rest));
    if (odd.size() == 1) {
      form.linear[static_cast<std::size_t>(odd.front())].add_term(even, c);
    } else if (odd.size() == 3) {
      form.triple.add_term(even, c);
    } else {
      throw std::invalid_argument("rm_form: state is not odd under R -> -R");
    }
  }
  return form;
}

Polynomial relative_discriminant(int axis) { return discriminant(axis, 2); }

RmQuanta rm_quanta(const Multiplet& multiplet) {
  for (const auto& s : multiplet.states) {
    if (!is_pure_rm(s)) throw std::invalid_argument("rm_quanta: multiplet is not pure relative motion");
  }
  RmQuanta out;
  out.total_quanta = multiplet.states.front().degree();
  out.l = multiplet.l;
  const int excess = out.total_quanta - out.l;
  if (excess < 0 || excess % 2 != 0) {
    throw std::logic_error("rm_quanta: n - l = " + std::to_string(excess) +
                           " is not a nonnegative even number");
  }
  out.n_r = excess / 2;
  return out;
}

std::string to_string(Band band) { return band == Band::kRotational ? "rotational" : "vibrational"; }

BandAssignment band_assign(const Polynomial& p, const ShapeBasis& basis) {
  const std::size_t pseudo = pseudoscalar_index(basis);
  const ModuleDecomposition dec = decompose(p, basis);
  BandAssignment out;
  out.phi_support = dec.support();
  out.band = dec.coefficients[pseudo].is_zero() ? Band::kVibrational : Band::kRotational;
  return out;
}

BandAssignment band_assign(const Multiplet& multiplet, const ShapeBasis& basis) {
  const std::size_t pseudo = pseudoscalar_index(basis);
  std::set<int> support;
  BandAssignment out;
  for (const auto& s : multiplet.states) {
    const ModuleDecomposition dec = decompose(s, basis);
    for (int i : dec.support()) support.insert(i);
    if (!dec.coefficients[pseudo].is_zero()) out.band = Band::kRotational;
  }
  out.phi_support.assign(support.begin(), support.end());
  return out;
}

}  // namespace bargmann
