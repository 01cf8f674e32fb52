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

#include <gtest/gtest.h>

#include <limits>
#include <vector>

#include "test_support.hpp"

namespace cpmorita {
namespace {

using testutil::random_hermitian;
using testutil::random_matrix;
using testutil::random_psd;

constexpr Complex kI(0.0, 1.0);

TEST(ComplexMatrixTest, BasicOps) {
  const ComplexMatrix a(2, 2, {1.0, kI, 0.0, 2.0});
  const ComplexMatrix swap(2, 2, {0.0, 1.0, 1.0, 0.0});

  const ComplexMatrix prod = a * swap;
  EXPECT_EQ(prod(0, 0), kI);
  EXPECT_EQ(prod(0, 1), Complex(1.0));
  EXPECT_EQ(prod(1, 0), Complex(2.0));
  EXPECT_EQ(prod(1, 1), Complex(0.0));

  EXPECT_EQ(a.trace(), Complex(3.0));
  EXPECT_EQ(a.adjoint()(1, 0), -kI);
  EXPECT_EQ(a.transpose()(1, 0), kI);
  EXPECT_EQ(a.conjugate()(0, 1), -kI);

  const ComplexMatrix row(1, 2, {3.0, 4.0});
  EXPECT_DOUBLE_EQ(row.frobenius_norm(), 5.0);
  EXPECT_DOUBLE_EQ(row.max_abs(), 4.0);

  const ComplexMatrix e01 = ComplexMatrix::matrix_unit(2, 0, 1);
  EXPECT_EQ(e01(0, 1), Complex(1.0));
  EXPECT_EQ(e01(1, 0), Complex(0.0));
  EXPECT_EQ(ComplexMatrix::identity(3).trace(), Complex(3.0));

  EXPECT_DOUBLE_EQ(max_abs_diff(a, a), 0.0);
  EXPECT_DOUBLE_EQ(max_abs_diff(a, a + a), a.max_abs());
}

TEST(ComplexMatrixTest, ShapeErrors) {
  ComplexMatrix a(2, 2);
  const ComplexMatrix b(2, 3);
  EXPECT_THROW(a += b, DimensionError);
  EXPECT_THROW(a -= b, DimensionError);
  EXPECT_THROW(b * a, DimensionError);
  EXPECT_THROW(b.trace(), DimensionError);
  EXPECT_THROW(max_abs_diff(a, b), DimensionError);
  EXPECT_THROW(ComplexMatrix(2, 2, {1.0}), DimensionError);
  EXPECT_THROW(ComplexMatrix::matrix_unit(2, 2, 0), DimensionError);
}

TEST(HermitianEigTest, RealSymmetricKnownSpectrum) {
  const ComplexMatrix a(2, 2, {0.0, 1.0, 1.0, 0.0});
  const EigenDecomposition eig = hermitian_eig(a);
  ASSERT_EQ(eig.values.size(), 2u);
  EXPECT_NEAR(eig.values[0], 1.0, 1e-14);
  EXPECT_NEAR(eig.values[1], -1.0, 1e-14);

  // Columns are eigenvectors: A v = lambda v.
  for (std::size_t k = 0; k < 2; ++k) {
    ComplexMatrix v(2, 1);
    v(0, 0) = eig.vectors(0, k);
    v(1, 0) = eig.vectors(1, k);
    EXPECT_LE(max_abs_diff(a * v, eig.values[k] * v), 1e-14);
  }
}

TEST(HermitianEigTest, ComplexHermitianKnownSpectrum) {
  const ComplexMatrix a(2, 2, {2.0, kI, -kI, 2.0});
  const EigenDecomposition eig = hermitian_eig(a);
  EXPECT_NEAR(eig.values[0], 3.0, 1e-14);
  EXPECT_NEAR(eig.values[1], 1.0, 1e-14);
}

TEST(HermitianEigTest, DiagonalInputSortedDescending) {
  ComplexMatrix a(3, 3);
  a(0, 0) = 3.0;
  a(1, 1) = 1.0;
  a(2, 2) = 2.0;
  const EigenDecomposition eig = hermitian_eig(a);
  EXPECT_EQ(eig.values, (std::vector<double>{3.0, 2.0, 1.0}));
  // Eigenvector of 2.0 is the third coordinate axis.
  EXPECT_NEAR(std::abs(eig.vectors(2, 1)), 1.0, 1e-15);
}

TEST(HermitianEigTest, ReconstructsRandomHermitian) {
  SplitMix64 rng(101);
  const ComplexMatrix h = random_hermitian(6, rng);
  const EigenDecomposition eig = hermitian_eig(h);

  const ComplexMatrix& v = eig.vectors;
  EXPECT_LE(max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(6)), 1e-13);

  ComplexMatrix lambda(6, 6);
  for (std::size_t k = 0; k < 6; ++k) lambda(k, k) = eig.values[k];
  EXPECT_LE(max_abs_diff(v * lambda * v.adjoint(), h), 1e-12);

  for (std::size_t k = 0; k + 1 < 6; ++k) {
    EXPECT_GE(eig.values[k], eig.values[k + 1]);
  }
}

TEST(HermitianEigTest, RejectsNonHermitian) {
  const ComplexMatrix a(2, 2, {0.0, 1.0, 0.0, 0.0});
  EXPECT_THROW(hermitian_eig(a), NotHermitianError);
  EXPECT_THROW(hermitian_eig(ComplexMatrix(2, 3)), NotHermitianError);
}

TEST(HermitianEigTest, ToleratesRoundoffAsymmetry) {
  ComplexMatrix a(2, 2, {1.0, 0.5, 0.5, 1.0});
  a(0, 1) += 1e-13;  // below the 1e-10 pre-check
  EXPECT_NO_THROW(hermitian_eig(a));
  a(0, 1) += 1e-6;
  EXPECT_THROW(hermitian_eig(a), NotHermitianError);
}

TEST(NumericalRankTest, KnownRanks) {
  SplitMix64 rng(202);
  EXPECT_EQ(numerical_rank(random_psd(6, 3, rng)), 3u);
  EXPECT_EQ(numerical_rank(random_psd(5, 5, rng)), 5u);
  EXPECT_EQ(numerical_rank(ComplexMatrix(4, 4)), 0u);
  EXPECT_EQ(numerical_rank(ComplexMatrix::identity(5)), 5u);
}

TEST(NumericalRankTest, RejectsNegativeEigenvalue) {
  const ComplexMatrix neg = Complex(-1.0) * ComplexMatrix::identity(3);
  EXPECT_THROW(numerical_rank(neg), NotPsdError);
}

TEST(NumericalRankTest, AbsolutePolicyOverridesDefault) {
  ComplexMatrix a(3, 3);
  a(0, 0) = 1.0;
  a(1, 1) = 1e-6;
  EXPECT_EQ(numerical_rank(a), 2u);

  RankPolicy coarse;
  coarse.absolute = 1e-3;
  EXPECT_EQ(numerical_rank(a, coarse), 1u);
}

TEST(RankPolicyTest, ThresholdFormula) {
  const double eps = std::numeric_limits<double>::epsilon();
  RankPolicy policy;
  EXPECT_DOUBLE_EQ(policy.threshold(4, 2.0), 4.0 * eps * 2.0);
  // lambda_max below 1 is clamped to 1 so tiny matrices keep a floor.
  EXPECT_DOUBLE_EQ(policy.threshold(4, 0.5), 4.0 * eps);
  policy.absolute = 0.25;
  EXPECT_DOUBLE_EQ(policy.threshold(4, 2.0), 0.25);
}

TEST(KroneckerTest, MatchesEntryFormula) {
  const ComplexMatrix a(2, 2, {0.0, 1.0, 0.0, 0.0});
  const ComplexMatrix b(1, 1, {2.0});
  const ComplexMatrix prod = kronecker(a, b);
  ASSERT_EQ(prod.rows(), 2u);
  ASSERT_EQ(prod.cols(), 2u);
  EXPECT_EQ(prod(0, 1), Complex(2.0));
  EXPECT_EQ(prod(0, 0), Complex(0.0));

  SplitMix64 rng(303);
  const ComplexMatrix x = random_matrix(2, 3, rng);
  const ComplexMatrix y = random_matrix(3, 2, rng);
  const ComplexMatrix k = kronecker(x, y);
  ASSERT_EQ(k.rows(), 6u);
  ASSERT_EQ(k.cols(), 6u);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 2; ++c)
          EXPECT_EQ(k(i * 3 + r, j * 2 + c), x(i, j) * y(r, c));

  EXPECT_LE(max_abs_diff(
                kronecker(ComplexMatrix::identity(2),
                          ComplexMatrix::identity(3)),
                ComplexMatrix::identity(6)),
            0.0);
}

TEST(PermuteConjugateTest, RelabelsBothSides) {
  const ComplexMatrix h(2, 2, {1.0, kI, -kI, 2.0});
  const std::vector<std::size_t> sigma{1, 0};
  const ComplexMatrix p = permute_conjugate(h, sigma);
  EXPECT_EQ(p(1, 1), h(0, 0));
  EXPECT_EQ(p(0, 0), h(1, 1));
  EXPECT_EQ(p(1, 0), h(0, 1));
}

TEST(PermuteConjugateTest, PreservesSpectrum) {
  SplitMix64 rng(404);
  const ComplexMatrix h = random_hermitian(5, rng);
  // A fixed 5-cycle.
  const std::vector<std::size_t> sigma{2, 4, 1, 0, 3};
  const EigenDecomposition before = hermitian_eig(h);
  const EigenDecomposition after = hermitian_eig(permute_conjugate(h, sigma));
  for (std::size_t k = 0; k < 5; ++k) {
    EXPECT_NEAR(before.values[k], after.values[k], 1e-12);
  }
}

TEST(PermuteConjugateTest, RejectsNonPermutations) {
  const ComplexMatrix h = ComplexMatrix::identity(3);
  const std::vector<std::size_t> repeated{0, 0, 1};
  const std::vector<std::size_t> out_of_range{0, 1, 3};
  const std::vector<std::size_t> short_sigma{0, 1};
  EXPECT_THROW(permute_conjugate(h, repeated), DimensionError);
  EXPECT_THROW(permute_conjugate(h, out_of_range), DimensionError);
  EXPECT_THROW(permute_conjugate(h, short_sigma), DimensionError);
}

}  // namespace
}  // namespace cpmorita
