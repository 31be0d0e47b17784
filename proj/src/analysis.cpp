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

#include "tensorctx/analysis.hpp"

#include <cmath>
#include <string>

#include "tensorctx/errors.hpp"

namespace tensorctx {

ComplexMatrix unfold(const ComplexVector &state,
                     const TensorProductOperator &t) {
    const auto d1 = t.type().d1;
    const auto d2 = t.type().d2;
    if (state.size() != t.type().target_dim()) {
        raise(ErrorCode::DimensionMismatch,
              "state has dimension " + std::to_string(state.size()) +
                  " but '" + t.label() + "' targets " +
                  std::to_string(t.type().target_dim()));
    }
    const ComplexVector coords = t.product_coordinates(state);
    ComplexMatrix m(d1, d2);
    for (Eigen::Index i = 0; i < d1; ++i) {
        for (Eigen::Index j = 0; j < d2; ++j) {
            m(i, j) = coords(i * d2 + j);
        }
    }
    return m;
}

SchmidtDecomposition schmidt(const ComplexVector &state,
                             const TensorProductOperator &t) {
    const ComplexMatrix m = unfold(state, t);
    const SvdResult parts = svd(m);
    SchmidtDecomposition out;
    out.coefficients = parts.sigma;
    out.rank = numerical_rank(parts.sigma);
    for (Eigen::Index k = 0; k < parts.sigma.size(); ++k) {
        out.left_vectors.emplace_back(parts.u.col(k));
        // M = sum s u v^dagger, so the second factor is conj(v).
        out.right_vectors.emplace_back(parts.v.col(k).conjugate());
    }
    return out;
}

std::optional<std::pair<ComplexVector, ComplexVector>>
factorize_state(const ComplexVector &state, const TensorProductOperator &t) {
    const SchmidtDecomposition decomposition = schmidt(state, t);
    if (decomposition.rank != 1) {
        return std::nullopt;
    }
    ComplexVector x = decomposition.left_vectors.front();
    ComplexVector y = decomposition.right_vectors.front();
    const Complex c = fix_phase(x);
    y /= c;
    const double norm = y.norm();
    if (norm > 0.0) {
        y /= norm;
    }
    return std::make_pair(std::move(x), std::move(y));
}

ComplexMatrix kronecker_rearrangement(const ComplexMatrix &m, Eigen::Index d1,
                                      Eigen::Index d2) {
    if (m.rows() != d1 * d2 || m.cols() != d1 * d2) {
        raise(ErrorCode::DimensionMismatch,
              "rearrangement of a " + std::to_string(m.rows()) + "x" +
                  std::to_string(m.cols()) + " matrix as (" +
                  std::to_string(d1) + "," + std::to_string(d2) + ")");
    }
    ComplexMatrix r(d1 * d1, d2 * d2);
    for (Eigen::Index i1 = 0; i1 < d1; ++i1) {
        for (Eigen::Index j1 = 0; j1 < d1; ++j1) {
            for (Eigen::Index i2 = 0; i2 < d2; ++i2) {
                for (Eigen::Index j2 = 0; j2 < d2; ++j2) {
                    r(i1 * d1 + j1, i2 * d2 + j2) =
                        m(i1 * d2 + i2, j1 * d2 + j2);
                }
            }
        }
    }
    return r;
}

std::optional<OperatorFactorization>
factorize_operator(const ComplexMatrix &l, const TensorProductOperator &t) {
    const auto d1 = t.type().d1;
    const auto d2 = t.type().d2;
    const auto dim = t.type().target_dim();
    if (l.rows() != dim || l.cols() != dim) {
        raise(ErrorCode::DimensionMismatch,
              "operator is " + std::to_string(l.rows()) + "x" +
                  std::to_string(l.cols()) + " but '" + t.label() +
                  "' targets " + std::to_string(dim));
    }
    require_finite(l, "operator");
    const ComplexMatrix local = t.twist().adjoint() * l * t.twist();
    const SvdResult parts = svd(kronecker_rearrangement(local, d1, d2));
    if (numerical_rank(parts.sigma) != 1) {
        return std::nullopt;
    }

    // R = s u v^dagger with vec(left) = u, vec(right) = s conj(v).
    ComplexVector u = parts.u.col(0);
    ComplexVector w = parts.sigma(0) * parts.v.col(0).conjugate();
    const Complex c = fix_phase(u);
    w /= c;

    OperatorFactorization out;
    out.left.resize(d1, d1);
    out.right.resize(d2, d2);
    for (Eigen::Index i = 0; i < d1; ++i) {
        for (Eigen::Index j = 0; j < d1; ++j) {
            out.left(i, j) = u(i * d1 + j);
        }
    }
    for (Eigen::Index i = 0; i < d2; ++i) {
        for (Eigen::Index j = 0; j < d2; ++j) {
            out.right(i, j) = w(i * d2 + j);
        }
    }
    out.residual = max_abs(t.lift(out.left, out.right) - l);
    return out;
}

ComplexMatrix conjugate(const ComplexMatrix &l, const ComplexMatrix &w) {
    require_square(l, "operator");
    if (w.rows() != l.rows() || w.cols() != l.cols()) {
        raise(ErrorCode::DimensionMismatch,
              "conjugating unitary is " + std::to_string(w.rows()) + "x" +
                  std::to_string(w.cols()) + ", operator is " +
                  std::to_string(l.rows()) + "x" + std::to_string(l.cols()));
    }
    require_unitary(w, "conjugating matrix");
    return w.adjoint() * l * w;
}

} // namespace tensorctx
