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

#ifndef CPMORITA_CHANNEL_HPP_
#define CPMORITA_CHANNEL_HPP_

#include <cstdint>
#include <cstddef>
#include <vector>

#include "cpmorita/numerics.hpp"

namespace cpmorita {

// splitmix64. Kept dependency-free and documented in the README so other
// implementations can reproduce channels from the same seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53 random bits.
  double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform in [-1, 1).
  double symmetric() { return 2.0 * uniform() - 1.0; }

 private:
  std::uint64_t state_;
};

// Completely positive map on the n x n complex matrices, stored as a
// finite Kraus list: P(a) = sum_r t_r a t_r*. The list may be empty
// (the zero map). Immutable after construction.
class CPMap {
 public:
  CPMap() : n_(1) {}
  CPMap(std::size_t n, std::vector<ComplexMatrix> kraus);

  std::size_t dim() const { return n_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  std::size_t kraus_count() const { return kraus_.size(); }

 private:
  std::size_t n_;
  std::vector<ComplexMatrix> kraus_;
};

// n^2 x n^2 Choi matrix with block (i,j) equal to P(e_ij):
//   mat[i*n + k, j*n + l] = P(e_ij)[k, l].
// Hermitian PSD exactly when the map is completely positive.
struct ChoiMatrix {
  std::size_t n = 0;
  ComplexMatrix mat;
};

struct IndexReport {
  std::size_t d_span = 0;  // rank of the span of the Kraus operators
  std::size_t d_choi = 0;  // rank of the Choi matrix
  std::size_t d_gram = 0;  // rank of the reduced-correspondence Gram
  bool agree = false;
};

// P(a) = sum_r t_r a t_r*. Empty Kraus list gives the zero matrix.
ComplexMatrix apply(const CPMap& map, const ComplexMatrix& a);

// The map that keeps the diagonal part of its argument; Kraus list
// e_11, ..., e_nn.
CPMap pinching(std::size_t n);

// Single Kraus operator I_n.
CPMap identity_channel(std::size_t n);

// num_kraus operators with entries re, im drawn uniformly from [-1, 1)
// in the fixed order (operator, row, column, re before im) from a
// SplitMix64 stream. Same seed, same channel.
CPMap random_cp(std::size_t n, std::size_t num_kraus, std::uint64_t seed);

// Action matrix on row-major vectorized inputs:
//   S[k*n + l, i*n + j] = P(e_ij)[k, l], so S vec(a) = vec(P(a)).
ComplexMatrix superoperator(const CPMap& map);

ChoiMatrix choi(const CPMap& map);

// One Kraus operator per Choi eigenvalue above the policy threshold:
//   t[k, i] = sqrt(lambda) * v[i*n + k].
// Throws NotPsdError if the Choi matrix has an eigenvalue below -tau.
CPMap kraus_from_choi(const ChoiMatrix& c, const RankPolicy& policy = {});

// Accepts a map given by its action matrix, checks complete positivity
// through the induced Choi matrix, and extracts a Kraus list. Throws
// NotCpError if the Choi matrix is not Hermitian PSD up to tolerance.
CPMap from_superoperator(const ComplexMatrix& s, const RankPolicy& policy = {});

// Kraus list t'_s = sum_r v[s, r] t_r. For unitary v this re-presents
// the same map.
CPMap mix_kraus(const CPMap& map, const ComplexMatrix& v);

// The dimension of the linear span of the Kraus operators, computed
// three independent ways; `agree` is set when all three coincide.
IndexReport index(const CPMap& map, const RankPolicy& policy = {});

}  // namespace cpmorita

#endif  // CPMORITA_CHANNEL_HPP_
