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

#ifndef CPMORITA_GNS_HPP_
#define CPMORITA_GNS_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "cpmorita/channel.hpp"
#include "cpmorita/numerics.hpp"

namespace cpmorita {

// Gram matrix of a spanning family indexed by pairs (i, j), 1-based,
// flattened row-major: label (i, j) sits at (i-1)*n + (j-1).
struct GramMatrix {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> labels;
  ComplexMatrix mat;
};

// Isometry onto the support of a Gram matrix G: columns v_k / sqrt(lambda_k)
// over the eigenpairs above the rank threshold, so V* G V = I_d.
struct MoritaWitness {
  std::size_t d = 0;
  ComplexMatrix isometry;  // n^2 x d
  double residual = 0.0;   // max |(V* G V - I_d)_ij|
};

struct ReductionReport {
  double gram_residual = 0.0;  // max |reduced - corner| entrywise
  double tolerance = 0.0;      // entrywise tolerance the check used
  std::size_t rank = 0;        // numerical rank of the reduced Gram
  std::size_t d = 0;           // index of the map (span rank)
  bool pass = false;           // residual within tolerance and rank == d
};

// Tolerance for entrywise Gram comparisons: absolute 1e-10 at unit
// scale, relative 1e-12 * sup-norm once entries grow past that.
double gram_equality_tolerance(double sup_norm);

// Gram matrix of the reduced GNS correspondence of P. Entry convention:
//   G[(i,j), (k,l)] = P(e_ik)[j, l] = sum_r t_r[j,i] * conj(t_r[l,k]),
// evaluated through the Kraus sum. Its rank equals the index of P.
GramMatrix reduced_gram(const CPMap& map);

// Gram matrix of the corner space spanned by e_1i (x) e_j1. Entry:
//   G[(i,j), (k,l)] = tr(e_1j P(e_ik) e_l1),
// evaluated literally with matrix products and a trace so that it stays
// an independent check against reduced_gram.
GramMatrix corner_gram(const CPMap& map);

// Checks that the reduced and corner Gram matrices agree entrywise and
// that the reduced Gram has rank equal to the index of the map. This is
// the numerical witness that the reduced correspondence is the Hilbert
// space of dimension d(P).
ReductionReport verify_reduction(const CPMap& map,
                                 const RankPolicy& policy = {});

// Explicit isometry realizing the reduced correspondence as C^d.
MoritaWitness morita_witness(const CPMap& map, const RankPolicy& policy = {});

}  // namespace cpmorita

#endif  // CPMORITA_GNS_HPP_
