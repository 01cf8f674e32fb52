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

#include "cpmorita/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

namespace cpmorita {

namespace {

std::string shape_string(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw DimensionError("ComplexMatrix: data length " +
                         std::to_string(data_.size()) + " does not equal " +
                         std::to_string(rows_ * cols_));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::matrix_unit(std::size_t n, std::size_t row,
                                         std::size_t col) {
  if (row >= n || col >= n) {
    throw DimensionError("matrix_unit: index out of range");
  }
  ComplexMatrix m(n, n);
  m(row, col) = 1.0;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (!same_shape(other)) {
    throw DimensionError("matrix add: " + shape_string(*this) + " vs " +
                         shape_string(other));
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (!same_shape(other)) {
    throw DimensionError("matrix subtract: " + shape_string(*this) + " vs " +
                         shape_string(other));
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& z : data_) z *= scalar;
  return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k)
    out.data_[k] = std::conj(data_[k]);
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) {
    throw DimensionError("trace: matrix is " + shape_string(*this));
  }
  Complex sum = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) sum += (*this)(i, i);
  return sum;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const auto& z : data_) sum += std::norm(z);
  return std::sqrt(sum);
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs += rhs;
  return lhs;
}

ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs -= rhs;
  return lhs;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw DimensionError("matrix multiply: " + shape_string(lhs) + " times " +
                         shape_string(rhs));
  }
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex a = lhs(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

ComplexMatrix operator*(Complex scalar, ComplexMatrix m) {
  m *= scalar;
  return m;
}

ComplexMatrix operator*(ComplexMatrix m, Complex scalar) {
  m *= scalar;
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.same_shape(b)) {
    throw DimensionError("max_abs_diff: " + shape_string(a) + " vs " +
                         shape_string(b));
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

double RankPolicy::threshold(std::size_t dim, double lambda_max) const {
  if (absolute.has_value()) return *absolute;
  return static_cast<double>(dim) * std::numeric_limits<double>::epsilon() *
         std::max(lambda_max, 1.0);
}

EigenDecomposition hermitian_eig(const ComplexMatrix& h, double tol) {
  if (!h.is_square()) {
    throw NotHermitianError("hermitian_eig: matrix is " + shape_string(h));
  }
  const std::size_t n = h.rows();

  double dev = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      dev = std::max(dev, std::abs(h(i, j) - std::conj(h(j, i))));
  if (dev > tol * std::max(1.0, h.max_abs())) {
    throw NotHermitianError("hermitian_eig: deviation from Hermitian is " +
                            std::to_string(dev));
  }

  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double eps = std::numeric_limits<double>::epsilon();
  const double frob = a.frobenius_norm();
  const double stop =
      eps * static_cast<double>(std::max<std::size_t>(n, 1)) *
      std::max(frob, std::numeric_limits<double>::min());
  // Entries this small cannot keep the off-diagonal mass above `stop`
  // on their own, so rotating on them is pointless.
  const double skip =
      stop / (4.0 * static_cast<double>(std::max<std::size_t>(n, 1)));

  const int max_sweeps = 100;
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    double off_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off_sq += 2.0 * std::norm(a(i, j));
    if (std::sqrt(off_sq) <= stop) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double rho = std::abs(apq);
        if (rho <= skip) continue;

        // Unitary 2x2 rotation G = diag(phase, 1) * [[c, s], [-s, c]]
        // chosen so that (G* A G)[p][q] = 0.
        const Complex phase = apq / rho;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * rho);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex gpp = c * phase;
        const Complex gpq = s * phase;

        // A <- A G (columns p, q), then A <- G* A (rows p, q).
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * gpp - s * akq;
          a(k, q) = akp * gpq + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk - s * aqk;
          a(q, k) = std::conj(gpq) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * gpp - s * vkq;
          v(k, q) = vkp * gpq + c * vkq;
        }
      }
    }
  }
  if (sweep == max_sweeps) {
    throw NoConvergenceError("hermitian_eig: no convergence after " +
                             std::to_string(max_sweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&a](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  EigenDecomposition result;
  result.values.resize(n);
  result.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    result.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) result.vectors(r, k) = v(r, order[k]);
  }
  return result;
}

std::size_t numerical_rank(const ComplexMatrix& h, const RankPolicy& policy) {
  const EigenDecomposition eig = hermitian_eig(h);
  if (eig.values.empty()) return 0;
  const double tau = policy.threshold(h.rows(), eig.values.front());
  if (eig.values.back() < -tau) {
    throw NotPsdError("numerical_rank: eigenvalue " +
                      std::to_string(eig.values.back()) +
                      " is below -tau = " + std::to_string(-tau));
  }
  std::size_t rank = 0;
  for (double lambda : eig.values) {
    if (lambda > tau) ++rank;
  }
  return rank;
}

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex scale = a(i, j);
      if (scale == 0.0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = scale * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix permute_conjugate(const ComplexMatrix& h,
                                std::span<const std::size_t> sigma) {
  if (!h.is_square() || sigma.size() != h.rows()) {
    throw DimensionError("permute_conjugate: matrix is " + shape_string(h) +
                         ", permutation has length " +
                         std::to_string(sigma.size()));
  }
  const std::size_t n = h.rows();
  std::vector<bool> seen(n, false);
  for (std::size_t idx : sigma) {
    if (idx >= n || seen[idx]) {
      throw DimensionError("permute_conjugate: not a permutation of 0.." +
                           std::to_string(n == 0 ? 0 : n - 1));
    }
    seen[idx] = true;
  }
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(sigma[i], sigma[j]) = h(i, j);
  return out;
}

}  // namespace cpmorita
