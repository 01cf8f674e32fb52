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

#include <gtest/gtest.h>

#include <cmath>
#include <utility>
#include <vector>

#include "test_support.hpp"

namespace cpmorita {
namespace {

using testutil::random_matrix;
using testutil::random_unitary;

TEST(GramToleranceTest, FloorAndScaling) {
  EXPECT_DOUBLE_EQ(gram_equality_tolerance(0.0), 1e-10);
  EXPECT_DOUBLE_EQ(gram_equality_tolerance(0.5), 1e-10);
  EXPECT_DOUBLE_EQ(gram_equality_tolerance(1.0), 1e-10);
  // Past a sup norm of 100 the relative term takes over.
  EXPECT_DOUBLE_EQ(gram_equality_tolerance(100.0), 1e-10);
  EXPECT_DOUBLE_EQ(gram_equality_tolerance(1e4), 1e-8);
}

TEST(ReducedGramTest, IdentityChannelOnM2) {
  const GramMatrix g = reduced_gram(identity_channel(2));
  // Entries delta_ij * delta_kl: the rank-one projector support.
  ComplexMatrix expected(4, 4);
  expected(0, 0) = expected(0, 3) = expected(3, 0) = expected(3, 3) = 1.0;
  EXPECT_DOUBLE_EQ(max_abs_diff(g.mat, expected), 0.0);
  EXPECT_EQ(numerical_rank(g.mat), 1u);
}

TEST(ReducedGramTest, PinchingOnM2) {
  const GramMatrix g = reduced_gram(pinching(2));
  ComplexMatrix expected(4, 4);
  expected(0, 0) = 1.0;  // label (1,1)
  expected(3, 3) = 1.0;  // label (2,2)
  EXPECT_DOUBLE_EQ(max_abs_diff(g.mat, expected), 0.0);
  EXPECT_EQ(numerical_rank(g.mat), 2u);
}

TEST(ReducedGramTest, LabelsAreRowMajorOneBased) {
  const GramMatrix g = reduced_gram(pinching(3));
  ASSERT_EQ(g.labels.size(), 9u);
  EXPECT_EQ(g.labels[0], (std::pair<std::size_t, std::size_t>{1, 1}));
  EXPECT_EQ(g.labels[5], (std::pair<std::size_t, std::size_t>{2, 3}));
  EXPECT_EQ(g.labels[8], (std::pair<std::size_t, std::size_t>{3, 3}));
}

// The Kraus double sum must reproduce the operational definition
// G[(i,j),(k,l)] = P(e_ik)[j,l], which is the authoritative formula.
TEST(ReducedGramTest, MatchesOperationalDefinition) {
  for (const CPMap& p : {random_cp(2, 2, 41), random_cp(3, 4, 42)}) {
    const std::size_t n = p.dim();
    const GramMatrix g = reduced_gram(p);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const ComplexMatrix block =
            apply(p, ComplexMatrix::matrix_unit(n, i, k));
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t l = 0; l < n; ++l)
            EXPECT_LE(std::abs(g.mat(i * n + j, k * n + l) - block(j, l)),
                      1e-13)
                << "entry (" << i << j << "),(" << k << l << ")";
      }
  }
}

TEST(ReducedGramTest, HermitianPsd) {
  const CPMap p = random_cp(3, 3, 43);
  const GramMatrix g = reduced_gram(p);
  EXPECT_LE(max_abs_diff(g.mat, g.mat.adjoint()), 1e-13);
  const EigenDecomposition eig = hermitian_eig(g.mat);
  EXPECT_GE(eig.values.back(), -1e-12 * std::max(1.0, g.mat.max_abs()));
}

TEST(CornerGramTest, EqualsReducedGramOnExamples) {
  EXPECT_DOUBLE_EQ(max_abs_diff(corner_gram(pinching(2)).mat,
                                reduced_gram(pinching(2)).mat),
                   0.0);
  EXPECT_DOUBLE_EQ(max_abs_diff(corner_gram(identity_channel(2)).mat,
                                reduced_gram(identity_channel(2)).mat),
                   0.0);
  const CPMap p = random_cp(2, 2, 44);
  EXPECT_LE(max_abs_diff(corner_gram(p).mat, reduced_gram(p).mat), 1e-12);
}

TEST(VerifyReductionTest, PassesOnNamedChannels) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const ReductionReport r = verify_reduction(pinching(n));
    EXPECT_TRUE(r.pass) << "pinching " << n;
    EXPECT_EQ(r.rank, n);
    EXPECT_EQ(r.d, n);
  }
  const ReductionReport id = verify_reduction(identity_channel(3));
  EXPECT_TRUE(id.pass);
  EXPECT_EQ(id.rank, 1u);
}

TEST(VerifyReductionTest, ZeroMapPassesWithRankZero) {
  const ReductionReport r = verify_reduction(CPMap(2, {}));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.rank, 0u);
  EXPECT_EQ(r.d, 0u);
  EXPECT_DOUBLE_EQ(r.gram_residual, 0.0);
}

TEST(VerifyReductionTest, GenericRankMatchesKrausCount) {
  const ReductionReport r = verify_reduction(random_cp(3, 4, 17));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.rank, 4u);
  EXPECT_LE(r.gram_residual, r.tolerance);
}

TEST(VerifyReductionTest, ScalingByPositiveConstant) {
  // Scaling each Kraus operator by sqrt(c) scales the Gram by c; with
  // c = 4 both scalings are exact in floating point.
  const CPMap p = random_cp(2, 3, 18);
  std::vector<ComplexMatrix> scaled;
  for (const auto& t : p.kraus()) scaled.push_back(Complex(2.0) * t);
  const CPMap cp(2, std::move(scaled));

  const GramMatrix g = reduced_gram(p);
  const GramMatrix gc = reduced_gram(cp);
  EXPECT_DOUBLE_EQ(max_abs_diff(gc.mat, Complex(4.0) * g.mat), 0.0);
  EXPECT_EQ(numerical_rank(gc.mat), numerical_rank(g.mat));
  EXPECT_TRUE(verify_reduction(cp).pass);
}

TEST(ReducedGramTest, InvariantUnderKrausMixing) {
  const CPMap p = random_cp(2, 3, 21);
  SplitMix64 rng(23);
  const CPMap mixed = mix_kraus(p, random_unitary(3, rng));
  EXPECT_LE(max_abs_diff(reduced_gram(p).mat, reduced_gram(mixed).mat),
            1e-10);
}

TEST(MoritaWitnessTest, IdentityChannelOnM2) {
  const MoritaWitness w = morita_witness(identity_channel(2));
  EXPECT_EQ(w.d, 1u);
  ASSERT_EQ(w.isometry.rows(), 4u);
  ASSERT_EQ(w.isometry.cols(), 1u);
  // The support is spanned by the diagonal-pair indicator (1,0,0,1)/2
  // after the 1/sqrt(lambda) scaling.
  EXPECT_NEAR(std::abs(w.isometry(0, 0)), 0.5, 1e-12);
  EXPECT_NEAR(std::abs(w.isometry(1, 0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(w.isometry(2, 0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(w.isometry(3, 0)), 0.5, 1e-12);
  EXPECT_LE(w.residual, 1e-12);
}

TEST(MoritaWitnessTest, PinchingOnM2) {
  const MoritaWitness w = morita_witness(pinching(2));
  EXPECT_EQ(w.d, 2u);
  EXPECT_LE(w.residual, 1e-12);
}

TEST(MoritaWitnessTest, ZeroMapHasEmptyIsometry) {
  const MoritaWitness w = morita_witness(CPMap(2, {}));
  EXPECT_EQ(w.d, 0u);
  EXPECT_EQ(w.isometry.rows(), 4u);
  EXPECT_EQ(w.isometry.cols(), 0u);
  EXPECT_DOUBLE_EQ(w.residual, 0.0);
}

TEST(MoritaWitnessTest, RandomChannelsSatisfyTheContract) {
  for (std::uint64_t seed = 80; seed < 86; ++seed) {
    const std::size_t n = 2 + seed % 2;
    const CPMap p = random_cp(n, 1 + seed % (n * n), seed);
    const MoritaWitness w = morita_witness(p);
    EXPECT_LE(w.residual, 1e-10) << "seed " << seed;
    EXPECT_EQ(w.d, index(p).d_span) << "seed " << seed;
    EXPECT_EQ(w.isometry.rows(), n * n);
  }
}

TEST(MoritaWitnessTest, ColumnsCaptureTheSupport) {
  // Any vector orthogonal to the isometry's columns is annihilated by G.
  const CPMap p = random_cp(2, 2, 90);
  const GramMatrix g = reduced_gram(p);
  const MoritaWitness w = morita_witness(p);
  ASSERT_GT(w.d, 0u);

  SplitMix64 rng(91);
  ComplexMatrix v = random_matrix(4, 1, rng);
  for (std::size_t k = 0; k < w.d; ++k) {
    // Normalize column k, then remove its component from v.
    double norm_sq = 0.0;
    for (std::size_t r = 0; r < 4; ++r) norm_sq += std::norm(w.isometry(r, k));
    Complex dot = 0.0;
    for (std::size_t r = 0; r < 4; ++r)
      dot += std::conj(w.isometry(r, k)) * v(r, 0);
    for (std::size_t r = 0; r < 4; ++r)
      v(r, 0) -= (dot / norm_sq) * w.isometry(r, k);
  }

  const double v_norm = v.frobenius_norm();
  ASSERT_GT(v_norm, 1e-6);
  const ComplexMatrix gv = g.mat * v;
  EXPECT_LE(gv.frobenius_norm() / v_norm, 1e-10 * g.mat.frobenius_norm());
}

}  // namespace
}  // namespace cpmorita
