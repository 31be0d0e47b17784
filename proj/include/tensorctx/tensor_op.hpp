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

#include <cstdint>
#include <string>
#include <vector>

#include "tensorctx/numerics.hpp"

namespace tensorctx {

/// The type H1 x H2 -> H of a bipartite tensor operator. The target
/// dimension is always d1 * d2.
struct TensorType {
    Eigen::Index d1 = 0;
    Eigen::Index d2 = 0;

    TensorType() = default;
    TensorType(Eigen::Index first, Eigen::Index second);

    [[nodiscard]] Eigen::Index target_dim() const noexcept { return d1 * d2; }

    friend bool operator==(const TensorType &, const TensorType &) = default;
};

std::string to_string(const TensorType &type);

/// A tensor product operator stored as its unitary twist W against the
/// canonical Kronecker map, so that apply(x, y) = W * kron(x, y). Factor
/// spaces always use their standard bases; the twist is expressed in the
/// target space's fixed reference basis.
class TensorProductOperator {
  public:
    /// Throws NotUnitary or DimensionMismatch when the twist does not fit.
    TensorProductOperator(TensorType type, ComplexMatrix twist,
                          std::string label);

    [[nodiscard]] const TensorType &type() const noexcept { return type_; }
    [[nodiscard]] const ComplexMatrix &twist() const noexcept { return twist_; }
    [[nodiscard]] const std::string &label() const noexcept { return label_; }

    [[nodiscard]] ComplexVector apply(const ComplexVector &x,
                                      const ComplexVector &y) const;

    /// L1 (x) L2 relative to this operator: W * kron(L1, L2) * W^dagger.
    [[nodiscard]] ComplexMatrix lift(const ComplexMatrix &l1,
                                     const ComplexMatrix &l2) const;

    /// The reference-basis matrix of the operator whose matrix relative to
    /// this operator's product basis is `m`: W * m * W^dagger.
    [[nodiscard]] ComplexMatrix represent(const ComplexMatrix &m) const;

    /// Coefficients of `state` in this operator's product basis, flat index
    /// i * d2 + j: W^dagger * state.
    [[nodiscard]] ComplexVector
    product_coordinates(const ComplexVector &state) const;

    [[nodiscard]] TensorProductOperator relabeled(std::string label) const;

  private:
    TensorType type_;
    ComplexMatrix twist_;
    std::string label_;
};

TensorProductOperator canonical(Eigen::Index d1, Eigen::Index d2,
                                std::string label = "canonical");

/// (U o t): the twist becomes U * t.twist. An empty label derives one.
TensorProductOperator from_twist(const TensorProductOperator &t,
                                 const ComplexMatrix &u,
                                 std::string label = {});

/// Operator whose value on (e_i, f_j) is images[i * d2 + j]. Images must be
/// mutually orthonormal (NotOrthonormal) and there must be d1 * d2 of them
/// (WrongCount).
TensorProductOperator
from_basis_images(TensorType type, const std::vector<ComplexVector> &images,
                  std::string label = "from_images");

ComplexVector apply(const TensorProductOperator &t, const ComplexVector &x,
                    const ComplexVector &y);

ComplexMatrix lift(const TensorProductOperator &t, const ComplexMatrix &l1,
                   const ComplexMatrix &l2);

/// The unique unitary W with b = W o a, namely b.twist * a.twist^dagger.
ComplexMatrix relating_unitary(const TensorProductOperator &a,
                               const TensorProductOperator &b);

struct AxiomReport {
    std::size_t trials = 0;
    double bilinearity_residual = 0.0; ///< max over both arguments
    double norm_residual = 0.0;        ///< max | ||t(x,y)|| - 1 | on unit x, y
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

/// Randomized check of bilinearity in each argument and norm preservation.
/// Deterministic for a given seed.
AxiomReport verify_axioms(const TensorProductOperator &t, std::size_t trials,
                          std::uint64_t seed, Tolerance tol = {});

struct RelationReport {
    std::size_t trials = 0;
    double basis_residual = 0.0;     ///< max || W a(e_i, f_j) - b(e_i, f_j) ||
    double lift_residual = 0.0;      ///< max |lift(b, L1, L2) - W lift(a, L1, L2) W^dagger|
    double involution_residual = 0.0; ///< max |W(a, b) W(b, a) - I|
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

/// Checks that W = relating_unitary(a, b) carries a's basis images to b's and
/// conjugates lifts, with random local operators. Throws TypeMismatch.
RelationReport verify_relation(const TensorProductOperator &a,
                               const TensorProductOperator &b, std::size_t trials,
                               std::uint64_t seed,
                               Tolerance tol = Tolerance(kReconstructionTolerance));

} // namespace tensorctx
