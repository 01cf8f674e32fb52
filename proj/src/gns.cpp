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

#include "cpmorita/gns.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace cpmorita {

namespace {

std::vector<std::pair<std::size_t, std::size_t>> pair_labels(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> labels;
  labels.reserve(n * n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) labels.emplace_back(i, j);
  return labels;
}

}  // namespace

double gram_equality_tolerance(double sup_norm) {
  return std::max(1e-10, 1e-12 * std::max(1.0, sup_norm));
}

GramMatrix reduced_gram(const CPMap& map) {
  const std::size_t n = map.dim();
  ComplexMatrix g(n * n, n * n);
  for (const auto& t : map.kraus()) {
    // Rank-one update by the vector m with m[(i,j)] = t[j,i].
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Complex left = t(j, i);
        if (left == 0.0) continue;
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t l = 0; l < n; ++l) {
            g(i * n + j, k * n + l) += left * std::conj(t(l, k));
          }
        }
      }
    }
  }
  return GramMatrix{n, pair_labels(n), std::move(g)};
}

GramMatrix corner_gram(const CPMap& map) {
  const std::size_t n = map.dim();
  ComplexMatrix g(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const ComplexMatrix p_ik = apply(map, ComplexMatrix::matrix_unit(n, i, k));
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
          const ComplexMatrix prod = ComplexMatrix::matrix_unit(n, 0, j) *
                                     p_ik *
                                     ComplexMatrix::matrix_unit(n, l, 0);
          g(i * n + j, k * n + l) = prod.trace();
        }
      }
    }
  }
  return GramMatrix{n, pair_labels(n), std::move(g)};
}

ReductionReport verify_reduction(const CPMap& map, const RankPolicy& policy) {
  const GramMatrix reduced = reduced_gram(map);
  const GramMatrix corner = corner_gram(map);

  ReductionReport report;
  report.gram_residual = max_abs_diff(reduced.mat, corner.mat);
  report.tolerance = gram_equality_tolerance(reduced.mat.max_abs());
  report.rank = numerical_rank(reduced.mat, policy);
  report.d = index(map, policy).d_span;
  report.pass =
      report.gram_residual <= report.tolerance && report.rank == report.d;
  return report;
}

MoritaWitness morita_witness(const CPMap& map, const RankPolicy& policy) {
  const GramMatrix gram = reduced_gram(map);
  const std::size_t dim = gram.mat.rows();
  const EigenDecomposition eig = hermitian_eig(gram.mat);
  const double tau = policy.threshold(dim, eig.values.front());
  if (eig.values.back() < -tau) {
    throw NotPsdError("morita_witness: Gram eigenvalue " +
                      std::to_string(eig.values.back()) + " is below -tau");
  }

  std::size_t d = 0;
  while (d < eig.values.size() && eig.values[d] > tau) ++d;

  ComplexMatrix isometry(dim, d);
  for (std::size_t k = 0; k < d; ++k) {
    const double scale = 1.0 / std::sqrt(eig.values[k]);
    for (std::size_t r = 0; r < dim; ++r) {
      isometry(r, k) = scale * eig.vectors(r, k);
    }
  }

  const ComplexMatrix product = isometry.adjoint() * gram.mat * isometry;
  const double residual =
      max_abs_diff(product, ComplexMatrix::identity(d));
  return MoritaWitness{d, std::move(isometry), residual};
}

}  // namespace cpmorita
