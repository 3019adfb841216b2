#pragma once

// Dense exact linear algebra over the Gaussian rationals, plus the glue that
// turns lists of polynomials into coefficient matrices.

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bargmann/polynomial.hpp"

namespace bargmann {

using Vector = std::vector<GaussianRational>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

struct RowEchelon {
  Matrix reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}; one vector per free column, with that entry 1.
std::vector<Vector> kernel(const Matrix& m);

struct SolveResult {
  bool consistent = false;
  bool unique = false;
  Vector solution;  // one particular solution when consistent
};

SolveResult solve(const Matrix& a, const Vector& b);

/// Coefficient columns of `polys` over the union of their monomials
/// (rows in canonical monomial order).
Matrix coefficient_matrix(std::span<const Polynomial> polys);

/// Rank of the linear span of `polys`.
std::size_t span_rank(std::span<const Polynomial> polys);

/// Gram matrix G(i,j) = <rows_i, cols_j>.
Matrix gram_matrix(std::span<const Polynomial> rows, std::span<const Polynomial> cols);

/// sum_j coeffs[j] * polys[j]
Polynomial combine(std::span<const Polynomial> polys, const Vector& coeffs);

/// Basis of the subspace of span(polys) on which `image` vanishes, where
/// image[j] is the image of polys[j] under some linear map. Each result is
/// sum_j c_j polys[j] for a kernel vector c of the image matrix.
std::vector<Polynomial> preimage_kernel(std::span<const Polynomial> polys,
                                        std::span<const Polynomial> image);

/// v minus its orthogonal projection onto span(orthogonal); `orthogonal`
/// must be pairwise orthogonal and nonzero.
Polynomial orthogonal_residual(const Polynomial& v, std::span<const Polynomial> orthogonal);

/// Exact Gram-Schmidt without normalization; linearly dependent inputs are dropped.
std::vector<Polynomial> gram_schmidt(std::span<const Polynomial> polys);

}  // namespace bargmann
