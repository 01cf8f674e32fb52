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

#include "cpmorita/compose.hpp"

#include <string>
#include <utility>

namespace cpmorita {

namespace {

void check_same_dim(const CPMap& p1, const CPMap& p2, const char* where) {
  if (p1.dim() != p2.dim()) {
    throw DimensionError(std::string(where) + ": maps act on " +
                         std::to_string(p1.dim()) + "x" +
                         std::to_string(p1.dim()) + " and " +
                         std::to_string(p2.dim()) + "x" +
                         std::to_string(p2.dim()));
  }
}

}  // namespace

TwoStepGram two_step_gram(const CPMap& p1, const CPMap& p2) {
  check_same_dim(p1, p2, "two_step_gram");
  const std::size_t n = p1.dim();
  const std::size_t dim = n * n * n * n;

  std::vector<std::array<std::size_t, 4>> labels;
  labels.reserve(dim);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t k = 1; k <= n; ++k)
      for (std::size_t l = 1; l <= n; ++l)
        for (std::size_t j = 1; j <= n; ++j)
          labels.push_back({i, k, l, j});

  // P1(e_jq) appears in every entry with the same (j, q); cache it.
  std::vector<ComplexMatrix> p1_units(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t q = 0; q < n; ++q)
      p1_units[j * n + q] = apply(p1, ComplexMatrix::matrix_unit(n, j, q));

  ComplexMatrix g(dim, dim);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t j = 0; j < n; ++j, ++row) {
          std::size_t col = 0;
          for (std::size_t m = 0; m < n; ++m) {
            for (std::size_t p = 0; p < n; ++p) {
              for (std::size_t h = 0; h < n; ++h) {
                for (std::size_t q = 0; q < n; ++q, ++col) {
                  const ComplexMatrix inner =
                      ComplexMatrix::matrix_unit(n, l, k) * p1_units[j * n + q] *
                      ComplexMatrix::matrix_unit(n, p, h);
                  g(row, col) = apply(p2, inner)(i, m);
                }
              }
            }
          }
        }
      }
    }
  }
  return TwoStepGram{n, std::move(labels), std::move(g)};
}

FactorizationReport verify_factorization(const CPMap& p1, const CPMap& p2,
                                         const RankPolicy& policy) {
  check_same_dim(p1, p2, "verify_factorization");
  const std::size_t n = p1.dim();
  const std::size_t nn = n * n;

  const GramMatrix g1 = reduced_gram(p1);
  const GramMatrix g2 = reduced_gram(p2);
  const TwoStepGram g12 = two_step_gram(p1, p2);

  // The Kronecker product of the one-step Grams is indexed by pairs of
  // pairs ((j,k), (l,i)); sigma carries that index back to the
  // quadruple (i,k,l,j) so the two matrices can be compared entrywise.
  std::vector<std::size_t> sigma(nn * nn);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t j = 0; j < n; ++j) {
          const std::size_t quad = ((i * n + k) * n + l) * n + j;
          const std::size_t pair_pair = (j * n + k) * nn + (l * n + i);
          sigma[pair_pair] = quad;
        }

  const ComplexMatrix factored =
      permute_conjugate(kronecker(g1.mat, g2.mat), sigma);

  FactorizationReport report;
  report.residual = max_abs_diff(g12.mat, factored);
  report.tolerance = gram_equality_tolerance(g12.mat.max_abs());
  report.rank = numerical_rank(g12.mat, policy);
  report.d1 = index(p1, policy).d_span;
  report.d2 = index(p2, policy).d_span;
  report.pass = report.residual <= report.tolerance &&
                report.rank == report.d1 * report.d2;
  return report;
}

}  // namespace cpmorita
