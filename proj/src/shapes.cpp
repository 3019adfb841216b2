#include "bargmann/shapes.hpp"

#include <algorithm>
#include <map>

#include "bargmann/linalg.hpp"
#include "bargmann/operators.hpp"

namespace bargmann {

namespace {

std::vector<int> axis_degrees_of(const Polynomial& p, int dims) {
  return p.leading_monomial().axis_degrees(dims);
}

}  // namespace

std::vector<Polynomial> euler_excited_subspace(const ShellSpec& spec) {
  spec.validate();
  std::vector<Polynomial> out;
  for (int k = 1; k <= spec.shell; ++k) {
    const auto lower = slater_basis({spec.particles, spec.dims, spec.shell - k});
    if (lower.empty()) continue;
    for (const auto& boson : euler_monomials(spec.particles, spec.dims, k)) {
      for (const auto& state : lower) out.push_back(boson.polynomial * state.polynomial);
    }
  }
  return out;
}

std::vector<Shape> shape_subspace(const ShellSpec& spec) {
  // Slater states and excited products are multihomogeneous, so the shell
  // splits into orthogonal blocks of fixed per-axis degree.
  std::map<std::vector<int>, std::vector<Polynomial>> states;
  std::map<std::vector<int>, std::vector<Polynomial>> excited;
  for (auto& s : slater_basis(spec)) {
    states[axis_degrees_of(s.polynomial, spec.dims)].push_back(std::move(s.polynomial));
  }
  for (auto& x : euler_excited_subspace(spec)) {
    if (x.is_zero()) continue;
    excited[axis_degrees_of(x, spec.dims)].push_back(std::move(x));
  }

  std::vector<Shape> out;
  for (const auto& [key, block] : states) {
    std::vector<Polynomial> complement;
    auto ex = excited.find(key);
    if (ex == excited.end()) {
      complement = block;
    } else {
      for (const Vector& c : kernel(gram_matrix(ex->second, block))) {
        complement.push_back(combine(block, c));
      }
    }
    for (auto& v : gram_schmidt(complement)) {
      Polynomial shape = canonical_form(v);
      Rational n = norm_sq(shape);
      out.push_back({std::move(shape), spec.shell, spec.total_degree(), key, std::move(n)});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Shape& a, const Shape& b) {
    return a.polynomial.leading_monomial() > b.polynomial.leading_monomial();
  });
  return out;
}

ShapeBasis full_shape_basis(int particles, int dims, int max_shell) {
  ShapeBasis basis{particles, dims, max_shell, {}};
  for (int s = 0; s <= max_shell; ++s) {
    for (auto& shape : shape_subspace({particles, dims, s})) basis.shapes.push_back(std::move(shape));
  }
  return basis;
}

ShapeBasis complete_shape_basis(int particles, int dims, int shell_limit) {
  ShapeBasis basis{particles, dims, 0, {}};
  for (int s = 0; s <= shell_limit; ++s) {
    for (auto& shape : shape_subspace({particles, dims, s})) basis.shapes.push_back(std::move(shape));
    basis.max_shell = s;
    if (basis.complete()) return basis;
  }
  throw IncompleteBasisError("shape basis incomplete: found " + std::to_string(basis.shapes.size()) +
                             " of " + std::to_string(basis.expected_count()) + " shapes by shell " +
                             std::to_string(shell_limit));
}

std::vector<int> ModuleDecomposition::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (!coefficients[i].is_zero()) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

ModuleDecomposition decompose(const Polynomial& p, const ShapeBasis& basis) {
  if (!basis.complete()) {
    throw IncompleteBasisError("decompose: shape basis has " + std::to_string(basis.shapes.size()) +
                               " of " + std::to_string(basis.expected_count()) + " shapes");
  }
  if (!is_antisymmetric(p, basis.particles)) {
    throw std::invalid_argument("decompose: input is not antisymmetric");
  }
  const bool graded = std::all_of(basis.shapes.begin(), basis.shapes.end(),
                                  [](const Shape& s) { return s.axis_degrees.has_value(); });

  ModuleDecomposition out;
  out.coefficients.assign(basis.shapes.size(), Polynomial{});

  // Grading key: per-axis degrees when every shape is multihomogeneous,
  // otherwise the total degree alone.
  const int dims = basis.dims;
  auto key_of = [&](const Monomial& m) {
    return graded ? m.axis_degrees(dims) : std::vector<int>{m.degree()};
  };
  for (const auto& [key, component] : p.split_by<std::vector<int>>(key_of)) {
    std::vector<Polynomial> columns;
    std::vector<std::pair<std::size_t, Polynomial>> unknowns;  // (shape index, boson)
    for (std::size_t i = 0; i < basis.shapes.size(); ++i) {
      const Shape& shape = basis.shapes[i];
      std::vector<EulerBosonMonomial> bosons;
      if (graded) {
        std::vector<int> rest(key.size());
        bool fits = true;
        for (std::size_t a = 0; a < key.size(); ++a) {
          rest[a] = key[a] - (*shape.axis_degrees)[a];
          fits = fits && rest[a] >= 0;
        }
        if (!fits) continue;
        bosons = euler_monomials_with_axis_degrees(basis.particles, rest);
      } else {
        if (key[0] < shape.degree) continue;
        bosons = euler_monomials(basis.particles, dims, key[0] - shape.degree);
      }
      for (auto& b : bosons) {
        columns.push_back(b.polynomial * shape.polynomial);
        unknowns.emplace_back(i, std::move(b.polynomial));
      }
    }
    columns.push_back(component);
    const Matrix full = coefficient_matrix(columns);
    Matrix a(full.rows(), unknowns.size());
    Vector rhs(full.rows());
    for (std::size_t r = 0; r < full.rows(); ++r) {
      for (std::size_t c = 0; c < unknowns.size(); ++c) a(r, c) = full(r, c);
      rhs[r] = full(r, unknowns.size());
    }
    const SolveResult sol = solve(a, rhs);
    if (!sol.consistent) {
      throw DecompositionError("decompose: no solution in the shape basis");
    }
    if (!sol.unique) {
      throw DecompositionError("decompose: coefficients are not unique");
    }
    for (std::size_t c = 0; c < unknowns.size(); ++c) {
      if (sol.solution[c].is_zero()) continue;
      out.coefficients[unknowns[c].first] += unknowns[c].second * sol.solution[c];
    }
  }
  return out;
}

Polynomial reconstruct(const ModuleDecomposition& decomposition, const ShapeBasis& basis) {
  Polynomial out;
  for (std::size_t i = 0; i < basis.shapes.size() && i < decomposition.coefficients.size(); ++i) {
    out += decomposition.coefficients[i] * basis.shapes[i].polynomial;
  }
  return out;
}

}  // namespace bargmann
