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

#ifndef CPMORITA_COMPOSE_HPP_
#define CPMORITA_COMPOSE_HPP_

#include <array>
#include <cstddef>
#include <vector>

#include "cpmorita/channel.hpp"
#include "cpmorita/gns.hpp"
#include "cpmorita/numerics.hpp"

namespace cpmorita {

// Gram matrix of the two-step correspondence built from P1 then P2.
// Labels are quadruples (i, k, l, j), 1-based, flattened row-major:
// (i,k,l,j) sits at (((i-1)*n + (k-1))*n + (l-1))*n + (j-1).
struct TwoStepGram {
  std::size_t n = 0;
  std::vector<std::array<std::size_t, 4>> labels;
  ComplexMatrix mat;  // n^4 x n^4
};

struct FactorizationReport {
  double residual = 0.0;   // two-step Gram vs permuted Kronecker product
  double tolerance = 0.0;  // entrywise tolerance the check used
  std::size_t rank = 0;    // numerical rank of the two-step Gram
  std::size_t d1 = 0;
  std::size_t d2 = 0;
  bool pass = false;       // residual within tolerance and rank == d1*d2
};

// Entry at ((i,k,l,j), (m,p,h,q)):
//   P2(e_lk P1(e_jq) e_ph)[i, m],
// evaluated literally from the inner-product formula with matrix
// products. Both maps must act on the same dimension.
TwoStepGram two_step_gram(const CPMap& p1, const CPMap& p2);

// Checks that the two-step Gram equals the Kronecker product of the two
// one-step Grams after the index relabeling
//   (i,k,l,j) -> ((j,k), (l,i)),
// and that its rank is d(P1)*d(P2).
FactorizationReport verify_factorization(const CPMap& p1, const CPMap& p2,
                                         const RankPolicy& policy = {});

}  // namespace cpmorita

#endif  // CPMORITA_COMPOSE_HPP_
