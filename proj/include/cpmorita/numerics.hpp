// Copyright 2026 The cpmorita Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CPMORITA_NUMERICS_HPP_
#define CPMORITA_NUMERICS_HPP_

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cpmorita/errors.hpp"

namespace cpmorita {

using Complex = std::complex<double>;

// Dense complex matrix, row-major storage, 0-based indexing.
// Zero rows/columns are legal (an isometry onto a zero-dimensional
// support is the 0-column case).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

  static ComplexMatrix identity(std::size_t n);
  // e_ij: 1 in entry (row, col), 0 elsewhere.
  static ComplexMatrix matrix_unit(std::size_t n, std::size_t row,
                                   std::size_t col);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool same_shape(const ComplexMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  Complex& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> data() const { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;

  // Largest |entry|; 0 for an empty matrix.
  double max_abs() const;
  double frobenius_norm() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scalar);

// max |a_ij - b_ij|; shapes must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Eigenvalues sorted descending; column k of `vectors` pairs with
// values[k], columns orthonormal.
struct EigenDecomposition {
  std::vector<double> values;
  ComplexMatrix vectors;
};

// Threshold used to separate numerically nonzero eigenvalues from noise.
// Default: tau = dim * machine_epsilon * max(lambda_max, 1). Setting
// `absolute` replaces that with a fixed cutoff.
struct RankPolicy {
  std::optional<double> absolute;

  double threshold(std::size_t dim, double lambda_max) const;
};

inline constexpr double kDefaultHermitianTol = 1e-10;

// Full eigendecomposition of a Hermitian matrix by cyclic Jacobi
// rotations. The input is checked against
//   max |h_ij - conj(h_ji)| <= tol * max(1, max|h_ij|)
// and symmetrized as (H + H*)/2 before iterating.
// Throws NotHermitianError on a failed pre-check and NoConvergenceError
// if the sweep budget runs out.
EigenDecomposition hermitian_eig(const ComplexMatrix& h,
                                 double tol = kDefaultHermitianTol);

// Number of eigenvalues above the policy threshold. The input must be
// Hermitian PSD up to tolerance; an eigenvalue below -tau raises
// NotPsdError.
std::size_t numerical_rank(const ComplexMatrix& h,
                           const RankPolicy& policy = {});

// (A (x) B)[i*rows_B + k, j*cols_B + l] = A[i,j] * B[k,l].
ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b);

// Relabels rows and columns: result[sigma(i), sigma(j)] = H[i,j].
// `sigma` must be a permutation of 0..dim-1; spectrum and rank are
// preserved.
ComplexMatrix permute_conjugate(const ComplexMatrix& h,
                                std::span<const std::size_t> sigma);

}  // namespace cpmorita

#endif  // CPMORITA_NUMERICS_HPP_
