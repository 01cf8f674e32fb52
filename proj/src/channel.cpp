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

#include "cpmorita/channel.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "cpmorita/gns.hpp"

namespace cpmorita {

CPMap::CPMap(std::size_t n, std::vector<ComplexMatrix> kraus)
    : n_(n), kraus_(std::move(kraus)) {
  if (n_ == 0) {
    throw DimensionError("CPMap: dimension must be positive");
  }
  for (const auto& t : kraus_) {
    if (t.rows() != n_ || t.cols() != n_) {
      throw DimensionError("CPMap: Kraus operator is " +
                           std::to_string(t.rows()) + "x" +
                           std::to_string(t.cols()) + ", expected " +
                           std::to_string(n_) + "x" + std::to_string(n_));
    }
  }
}

ComplexMatrix apply(const CPMap& map, const ComplexMatrix& a) {
  const std::size_t n = map.dim();
  if (a.rows() != n || a.cols() != n) {
    throw DimensionError("apply: argument is " + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()) + ", map acts on " +
                         std::to_string(n) + "x" + std::to_string(n));
  }
  ComplexMatrix out(n, n);
  for (const auto& t : map.kraus()) {
    out += t * a * t.adjoint();
  }
  return out;
}

CPMap pinching(std::size_t n) {
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    kraus.push_back(ComplexMatrix::matrix_unit(n, r, r));
  }
  return CPMap(n, std::move(kraus));
}

CPMap identity_channel(std::size_t n) {
  return CPMap(n, {ComplexMatrix::identity(n)});
}

CPMap random_cp(std::size_t n, std::size_t num_kraus, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(num_kraus);
  for (std::size_t r = 0; r < num_kraus; ++r) {
    ComplexMatrix t(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double re = rng.symmetric();
        const double im = rng.symmetric();
        t(i, j) = Complex(re, im);
      }
    }
    kraus.push_back(std::move(t));
  }
  return CPMap(n, std::move(kraus));
}

ComplexMatrix superoperator(const CPMap& map) {
  const std::size_t n = map.dim();
  ComplexMatrix s(n * n, n * n);
  for (const auto& t : map.kraus()) {
    s += kronecker(t, t.conjugate());
  }
  return s;
}

ChoiMatrix choi(const CPMap& map) {
  const std::size_t n = map.dim();
  ComplexMatrix c(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ComplexMatrix block =
          apply(map, ComplexMatrix::matrix_unit(n, i, j));
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          c(i * n + k, j * n + l) = block(k, l);
        }
      }
    }
  }
  return ChoiMatrix{n, std::move(c)};
}

CPMap kraus_from_choi(const ChoiMatrix& c, const RankPolicy& policy) {
  const std::size_t n = c.n;
  if (n == 0 || c.mat.rows() != n * n || c.mat.cols() != n * n) {
    throw DimensionError("kraus_from_choi: Choi matrix is " +
                         std::to_string(c.mat.rows()) + "x" +
                         std::to_string(c.mat.cols()) + ", expected " +
                         std::to_string(n * n) + "x" + std::to_string(n * n));
  }
  const EigenDecomposition eig = hermitian_eig(c.mat);
  const double tau = policy.threshold(n * n, eig.values.front());
  if (eig.values.back() < -tau) {
    throw NotPsdError("kraus_from_choi: Choi eigenvalue " +
                      std::to_string(eig.values.back()) + " is below -tau");
  }
  std::vector<ComplexMatrix> kraus;
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    const double lambda = eig.values[k];
    if (lambda <= tau) continue;
    const double scale = std::sqrt(lambda);
    ComplexMatrix t(n, n);
    for (std::size_t row = 0; row < n; ++row) {
      for (std::size_t i = 0; i < n; ++i) {
        t(row, i) = scale * eig.vectors(i * n + row, k);
      }
    }
    kraus.push_back(std::move(t));
  }
  return CPMap(n, std::move(kraus));
}

CPMap from_superoperator(const ComplexMatrix& s, const RankPolicy& policy) {
  if (!s.is_square()) {
    throw DimensionError("from_superoperator: matrix is not square");
  }
  std::size_t n = 0;
  while ((n + 1) * (n + 1) <= s.rows()) ++n;
  if (n == 0 || n * n != s.rows()) {
    throw DimensionError("from_superoperator: dimension " +
                         std::to_string(s.rows()) + " is not a square n^2");
  }

  // S[k*n + l, i*n + j] = P(e_ij)[k, l]  ->  C[i*n + k, j*n + l].
  ComplexMatrix c(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          c(i * n + k, j * n + l) = s(k * n + l, i * n + j);

  double dev = 0.0;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      dev = std::max(dev, std::abs(c(i, j) - std::conj(c(j, i))));
  if (dev > kDefaultHermitianTol * std::max(1.0, c.max_abs())) {
    throw NotCpError("from_superoperator: induced Choi matrix is not "
                     "Hermitian (deviation " + std::to_string(dev) + ")");
  }

  try {
    return kraus_from_choi(ChoiMatrix{n, std::move(c)}, policy);
  } catch (const NotPsdError& e) {
    throw NotCpError(std::string("from_superoperator: ") + e.what());
  }
}

CPMap mix_kraus(const CPMap& map, const ComplexMatrix& v) {
  if (v.cols() != map.kraus_count()) {
    throw DimensionError("mix_kraus: mixing matrix has " +
                         std::to_string(v.cols()) + " columns, map has " +
                         std::to_string(map.kraus_count()) +
                         " Kraus operators");
  }
  const std::size_t n = map.dim();
  std::vector<ComplexMatrix> mixed;
  mixed.reserve(v.rows());
  for (std::size_t s = 0; s < v.rows(); ++s) {
    ComplexMatrix t(n, n);
    for (std::size_t r = 0; r < v.cols(); ++r) {
      t += v(s, r) * map.kraus()[r];
    }
    mixed.push_back(std::move(t));
  }
  return CPMap(n, std::move(mixed));
}

IndexReport index(const CPMap& map, const RankPolicy& policy) {
  const std::size_t n = map.dim();
  const std::size_t nn = n * n;

  // Gram of the row-major vectorized Kraus operators; its rank is the
  // dimension of their linear span.
  ComplexMatrix span_gram(nn, nn);
  for (const auto& t : map.kraus()) {
    for (std::size_t a = 0; a < nn; ++a) {
      const Complex ta = t(a / n, a % n);
      if (ta == 0.0) continue;
      for (std::size_t b = 0; b < nn; ++b) {
        span_gram(a, b) += std::conj(ta) * t(b / n, b % n);
      }
    }
  }

  IndexReport report;
  report.d_span = numerical_rank(span_gram, policy);
  report.d_choi = numerical_rank(choi(map).mat, policy);
  report.d_gram = numerical_rank(reduced_gram(map).mat, policy);
  report.agree =
      report.d_span == report.d_choi && report.d_choi == report.d_gram;
  return report;
}

}  // namespace cpmorita
