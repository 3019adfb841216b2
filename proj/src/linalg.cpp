#include "bargmann/linalg.hpp"

#include <stdexcept>

namespace bargmann {

RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    const GaussianRational inv = GaussianRational(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const GaussianRational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> kernel(const Matrix& m) {
  const RowEchelon ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : ech.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      v[ech.pivots[r]] = -ech.reduced(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const RowEchelon ech = row_reduce(std::move(aug));
  SolveResult out;
  out.consistent = ech.pivots.empty() || ech.pivots.back() != a.cols();
  if (!out.consistent) return out;
  out.unique = ech.pivots.size() == a.cols();
  out.solution.assign(a.cols(), GaussianRational{});
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    out.solution[ech.pivots[r]] = ech.reduced(r, a.cols());
  }
  return out;
}

Matrix coefficient_matrix(std::span<const Polynomial> polys) {
  std::map<Monomial, std::size_t, LeadingFirst> index;
  for (const auto& p : polys) {
    for (const auto& [m, c] : p.terms()) index.emplace(m, 0);
  }
  std::size_t next = 0;
  for (auto& [m, i] : index) i = next++;
  Matrix out(index.size(), polys.size());
  for (std::size_t j = 0; j < polys.size(); ++j) {
    for (const auto& [m, c] : polys[j].terms()) out(index.at(m), j) = c;
  }
  return out;
}

std::size_t span_rank(std::span<const Polynomial> polys) {
  if (polys.empty()) return 0;
  return rank(coefficient_matrix(polys));
}

Matrix gram_matrix(std::span<const Polynomial> rows, std::span<const Polynomial> cols) {
  Matrix g(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) g(i, j) = inner_product(rows[i], cols[j]);
  }
  return g;
}

Polynomial combine(std::span<const Polynomial> polys, const Vector& coeffs) {
  if (coeffs.size() != polys.size()) throw std::invalid_argument("combine: size mismatch");
  Polynomial out;
  for (std::size_t j = 0; j < polys.size(); ++j) {
    if (!coeffs[j].is_zero()) out += polys[j] * coeffs[j];
  }
  return out;
}

std::vector<Polynomial> preimage_kernel(std::span<const Polynomial> polys,
                                        std::span<const Polynomial> image) {
  if (polys.size() != image.size()) throw std::invalid_argument("preimage_kernel: size mismatch");
  std::vector<Polynomial> out;
  if (polys.empty()) return out;
  Matrix m = coefficient_matrix(image);
  if (m.rows() == 0) m = Matrix(1, polys.size());  // every image is zero
  for (const Vector& c : kernel(m)) {
    Polynomial v = combine(polys, c);
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return out;
}

Polynomial orthogonal_residual(const Polynomial& v, std::span<const Polynomial> orthogonal) {
  Polynomial r = v;
  for (const auto& u : orthogonal) {
    const GaussianRational overlap = inner_product(u, v);
    if (overlap.is_zero()) continue;
    r -= u * (overlap / GaussianRational(norm_sq(u)));
  }
  return r;
}

std::vector<Polynomial> gram_schmidt(std::span<const Polynomial> polys) {
  std::vector<Polynomial> out;
  for (const auto& v : polys) {
    Polynomial r = orthogonal_residual(v, out);
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace bargmann
