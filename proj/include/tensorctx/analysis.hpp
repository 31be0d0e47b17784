// Copyright 2026 The tensorctx Authors
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

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tensorctx/numerics.hpp"
#include "tensorctx/tensor_op.hpp"

namespace tensorctx {

/// state = sum_k coefficients[k] * t(left_vectors[k], right_vectors[k]).
/// All min(d1, d2) terms are kept; `rank` counts the ones above the rank
/// threshold.
struct SchmidtDecomposition {
    RealVector coefficients;
    std::vector<ComplexVector> left_vectors;
    std::vector<ComplexVector> right_vectors;
    std::size_t rank = 0;
};

struct OperatorFactorization {
    ComplexMatrix left;  ///< d1 x d1, unit Frobenius norm
    ComplexMatrix right; ///< d2 x d2, carries the magnitude
    double residual = 0.0;
};

/// d1 x d2 coefficient matrix of `state` in t's product basis.
ComplexMatrix unfold(const ComplexVector &state,
                     const TensorProductOperator &t);

SchmidtDecomposition schmidt(const ComplexVector &state,
                             const TensorProductOperator &t);

/// (x, y) with t(x, y) equal to `state` up to global phase, when the state
/// is separable relative to t. x is phase-fixed (largest entry real and
/// nonnegative); y absorbs the remaining phase.
std::optional<std::pair<ComplexVector, ComplexVector>>
factorize_state(const ComplexVector &state, const TensorProductOperator &t);

/// Decides L = left (x)_t right via the rank of the Kronecker rearrangement
/// of W^dagger L W.
std::optional<OperatorFactorization>
factorize_operator(const ComplexMatrix &l, const TensorProductOperator &t);

/// d1^2 x d2^2 rearrangement R with R(i1*d1 + j1, i2*d2 + j2) =
/// M(i1*d2 + i2, j1*d2 + j2). rank(R) == 1 iff M is a Kronecker product.
ComplexMatrix kronecker_rearrangement(const ComplexMatrix &m, Eigen::Index d1,
                                      Eigen::Index d2);

/// W^dagger * L * W.
ComplexMatrix conjugate(const ComplexMatrix &l, const ComplexMatrix &w);

} // namespace tensorctx
