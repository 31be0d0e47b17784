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

#include <cmath>

#include <gtest/gtest.h>

#include "matchers.hpp"
#include "oracles.hpp"
#include "tensorctx/analysis.hpp"
#include "tensorctx/errors.hpp"
#include "tensorctx/random.hpp"
#include "tensorctx/scenarios.hpp"
#include "tensorctx/standard.hpp"

namespace {

using namespace tensorctx;
using namespace tensorctx::standard;
using testing_util::MatrixNear;
using testing_util::SameUpToPhase;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

ComplexVector bell00_t1() { return (basis(4, 0) + basis(4, 3)) * kInvSqrt2; }

TEST(Unfold, Examples) {
    const auto t1 = builtin::tensor1();
    const ComplexVector x = vec({0.6, Complex(0, 0.8)});
    const ComplexVector y = vec({kInvSqrt2, -kInvSqrt2});
    EXPECT_TRUE(MatrixNear(unfold(t1.apply(x, y), t1), x * y.transpose(), 1e-15));
    EXPECT_TRUE(MatrixNear(unfold(bell00_t1(), t1), kInvSqrt2 * identity(2), 1e-15));

    // Apply CX by hand, then reshape.
    const ComplexMatrix cx = cnot();
    const ComplexVector moved = oracle::naive_product(oracle::naive_adjoint(cx), bell00_t1());
    const ComplexMatrix want = oracle::coefficient_matrix(moved, 2, 2);
    ComplexMatrix literal(2, 2);
    literal << kInvSqrt2, 0, kInvSqrt2, 0;
    EXPECT_TRUE(MatrixNear(want, literal, 1e-15));
    EXPECT_TRUE(MatrixNear(unfold(bell00_t1(), builtin::tensor2()), want, 1e-15));
}

TEST(Schmidt, Examples) {
    const auto under1 = schmidt(bell00_t1(), builtin::tensor1());
    EXPECT_EQ(under1.rank, 2u);
    EXPECT_NEAR(under1.coefficients(0), kInvSqrt2, 1e-12);
    EXPECT_NEAR(under1.coefficients(1), kInvSqrt2, 1e-12);

    const auto under2 = schmidt(bell00_t1(), builtin::tensor2());
    EXPECT_EQ(under2.rank, 1u);
    EXPECT_NEAR(under2.coefficients(0), 1.0, 1e-12);
    EXPECT_NEAR(under2.coefficients(1), 0.0, 1e-12);
}

TEST(Schmidt, ProductStatesHaveRankOne) {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const TensorType type(2 + trial % 2, 2 + trial % 3);
        const TensorProductOperator t(type, random_unitary(type.target_dim(), rng), "t");
        const auto sd = schmidt(t.apply(random_state(type.d1, rng), random_state(type.d2, rng)), t);
        EXPECT_EQ(sd.rank, 1u);
    }
}

TEST(Schmidt, DimensionMismatch) {
    EXPECT_THROW((void)schmidt(basis(3, 0), builtin::tensor1()), Error);
}

TEST(SchmidtProperty, Reconstruction) {
    Rng rng(32);
    for (int trial = 0; trial < 50; ++trial) {
        const TensorType type(2 + trial % 2, 2 + trial % 3);
        const TensorProductOperator t(type, random_unitary(type.target_dim(), rng), "t");
        const ComplexVector psi = random_state(type.target_dim(), rng);
        const auto sd = schmidt(psi, t);
        ComplexVector sum = ComplexVector::Zero(psi.size());
        for (Eigen::Index k = 0; k < sd.coefficients.size(); ++k) {
            const auto uk = static_cast<std::size_t>(k);
            sum += sd.coefficients(k) * t.apply(sd.left_vectors[uk], sd.right_vectors[uk]);
        }
        EXPECT_LT((sum - psi).norm(), kReconstructionTolerance);
        EXPECT_NEAR(sd.coefficients.squaredNorm(), 1.0, 1e-12);
    }
}

TEST(SchmidtProperty, InvariantUnderLocalUnitaries) {
    Rng rng(33);
    for (int trial = 0; trial < 50; ++trial) {
        const TensorType type(2 + trial % 2, 3);
        const TensorProductOperator t(type, random_unitary(type.target_dim(), rng), "t");
        const ComplexVector psi = random_state(type.target_dim(), rng);
        const ComplexMatrix local =
            t.lift(random_unitary(type.d1, rng), random_unitary(type.d2, rng));
        const auto a = schmidt(psi, t).coefficients;
        const auto b = schmidt(local * psi, t).coefficients;
        EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-9);
    }
}

TEST(SchmidtProperty, ChangeOfOperatorCommutesWithChangeOfState) {
    Rng rng(34);
    for (int trial = 0; trial < 50; ++trial) {
        const TensorType type(3, 2);
        const TensorProductOperator a(type, random_unitary(6, rng), "a");
        const TensorProductOperator b(type, random_unitary(6, rng), "b");
        const ComplexVector psi = random_state(6, rng);
        const ComplexMatrix w = relating_unitary(a, b);
        const auto lhs = schmidt(w * psi, b).coefficients;
        const auto rhs = schmidt(psi, a).coefficients;
        EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-9);
    }
}

TEST(SchmidtOracle, RankMatchesGramMatrixRank) {
    Rng rng(35);
    const auto t1 = builtin::tensor1();
    std::vector<ComplexVector> states{bell00_t1(), basis(4, 0), basis(4, 3),
                                      t1.apply(ket_plus(), ket_minus()),
                                      (basis(4, 1) - basis(4, 2)) * kInvSqrt2};
    for (int trial = 0; trial < 40; ++trial) {
        states.push_back(trial % 2 == 0
                             ? random_state(4, rng)
                             : ComplexVector(kron(random_state(2, rng), random_state(2, rng))));
    }
    for (const auto &psi : states) {
        const auto coeffs = oracle::coefficient_matrix(psi, 2, 2);
        EXPECT_EQ(schmidt(psi, t1).rank, oracle::gram_rank(coeffs, 1e-6));
    }
}

TEST(FactorizeState, Examples) {
    const auto t1 = builtin::tensor1();
    const auto t2 = builtin::tensor2();
    const ComplexVector bell00_t2 =
        (t2.apply(ket0(), ket0()) + t2.apply(ket1(), ket1())) * kInvSqrt2;
    const auto f = factorize_state(bell00_t2, t1);
    ASSERT_TRUE(f.has_value());
    EXPECT_TRUE(MatrixNear(f->first, ket_plus(), 1e-12));
    EXPECT_TRUE(MatrixNear(f->second, ket0(), 1e-12));

    EXPECT_FALSE(factorize_state(bell00_t1(), t1).has_value());
    EXPECT_EQ(oracle::gram_rank(oracle::coefficient_matrix(bell00_t1(), 2, 2), 1e-6), 2u);

    const auto t3 = builtin::tensor3();
    const auto g = factorize_state(t3.apply(ket1(), ket0()), t3);
    ASSERT_TRUE(g.has_value());
    EXPECT_TRUE(SameUpToPhase(g->first, ket1(), 1e-12));
    EXPECT_TRUE(SameUpToPhase(g->second, ket0(), 1e-12));
}

TEST(FactorizeState, PhaseConvention) {
    const auto t = builtin::tensor1();
    const Complex phase = std::polar(1.0, 0.7);
    const ComplexVector x = vec({Complex(0, 0.6), 0.8});
    const ComplexVector y = vec({kInvSqrt2, Complex(0, kInvSqrt2)});
    const auto f = factorize_state(phase * t.apply(x, y), t);
    ASSERT_TRUE(f.has_value());
    const auto k = argmax_abs(f->first);
    EXPECT_GE(f->first(k).real(), 0.0);
    EXPECT_NEAR(f->first(k).imag(), 0.0, 1e-15);
    EXPECT_NEAR(f->first.norm(), 1.0, 1e-14);
    EXPECT_NEAR(f->second.norm(), 1.0, 1e-14);
    EXPECT_TRUE(MatrixNear(t.apply(f->first, f->second), phase * t.apply(x, y), 1e-12));
}

TEST(FactorizeStateProperty, RoundTrip) {
    Rng rng(36);
    for (int trial = 0; trial < 50; ++trial) {
        const TensorType type(2 + trial % 3, 2 + trial % 2);
        const TensorProductOperator t(type, random_unitary(type.target_dim(), rng), "t");
        const ComplexVector psi =
            trial % 3 == 0 ? random_state(type.target_dim(), rng)
                           : t.apply(random_state(type.d1, rng), random_state(type.d2, rng));
        if (const auto f = factorize_state(psi, t)) {
            EXPECT_TRUE(SameUpToPhase(t.apply(f->first, f->second), psi, 1e-9));
        } else {
            EXPECT_EQ(trial % 3, 0);
        }
    }
}

TEST(FactorizeOperator, Examples) {
    const auto canon = canonical(2, 2);
    const auto zz = factorize_operator(kron(pauli_z(), pauli_z()), canon);
    ASSERT_TRUE(zz.has_value());
    EXPECT_TRUE(MatrixNear(kron(zz->left, zz->right), kron(pauli_z(), pauli_z()), 1e-12));
    EXPECT_NEAR(zz->left.norm(), 1.0, 1e-14);
    // Z up to reciprocal scalars.
    const Complex ratio = zz->left(0, 0) / pauli_z()(0, 0);
    EXPECT_TRUE(MatrixNear(zz->left, ratio * pauli_z(), 1e-12));

    EXPECT_FALSE(factorize_operator(cnot(), builtin::tensor1()).has_value());
    EXPECT_TRUE(factorize_operator(bell_derived_twist(), builtin::tensor2()).has_value());
}

TEST(FactorizeOperator, RearrangementRankAgreesWithBlockSearch) {
    for (const ComplexMatrix &m : {cnot(), ComplexMatrix(kron(pauli_z(), pauli_z()))}) {
        const ComplexMatrix r = kronecker_rearrangement(m, 2, 2);
        const auto rank = numerical_rank(svd(r).sigma);
        EXPECT_EQ(rank, oracle::elimination_rank(r, 1e-9));
        const auto search = oracle::search_2x2_factors(m, 1e-9);
        EXPECT_EQ(rank == 1, search.found);
        EXPECT_EQ(factorize_operator(m, canonical(2, 2)).has_value(), search.found);
    }
    EXPECT_EQ(numerical_rank(svd(kronecker_rearrangement(cnot(), 2, 2)).sigma), 2u);
}

TEST(FactorizeOperator, ScalarSplitConvention) {
    Rng rng(37);
    const auto t = builtin::tensor3();
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix l1 = random_matrix(2, 2, rng);
        const ComplexMatrix l2 = random_matrix(2, 2, rng);
        const auto f = factorize_operator(t.lift(l1, l2), t);
        ASSERT_TRUE(f.has_value());
        EXPECT_NEAR(f->left.norm(), 1.0, 1e-12);
        Eigen::Index r = 0;
        Eigen::Index c = 0;
        f->left.cwiseAbs().maxCoeff(&r, &c);
        EXPECT_GE(f->left(r, c).real(), 0.0);
        EXPECT_NEAR(f->left(r, c).imag(), 0.0, 1e-12);
    }
}

TEST(FactorizeOperatorProperty, RoundTrip) {
    Rng rng(38);
    for (int trial = 0; trial < 50; ++trial) {
        const TensorType type(2 + trial % 2, 2 + trial % 3);
        const TensorProductOperator t(type, random_unitary(type.target_dim(), rng), "t");
        const ComplexMatrix l = trial % 4 == 0
                                    ? random_matrix(type.target_dim(), type.target_dim(), rng)
                                    : t.lift(random_matrix(type.d1, type.d1, rng),
                                             random_matrix(type.d2, type.d2, rng));
        if (const auto f = factorize_operator(l, t)) {
            EXPECT_LT(max_abs_diff(t.lift(f->left, f->right), l), kReconstructionTolerance);
            EXPECT_LT(f->residual, kReconstructionTolerance);
        } else {
            EXPECT_EQ(trial % 4, 0);
        }
    }
}

TEST(Conjugate, Examples) {
    const auto t1 = builtin::tensor1();
    const auto t2 = builtin::tensor2();
    const ComplexMatrix w = relating_unitary(t1, t2);
    EXPECT_TRUE(MatrixNear(conjugate(t2.lift(identity(2), pauli_z()), w),
                           t1.lift(identity(2), pauli_z()), 1e-15));
    Rng rng(39);
    const ComplexMatrix l = random_matrix(4, 4, rng);
    EXPECT_TRUE(MatrixNear(conjugate(l, identity(4)), l, 0.0));

    const ComplexMatrix sp = conjugate(bell_derived_twist(), cnot());
    const auto pairs = eig_hermitian(sp);
    const double want[] = {1, 1, -1, -1};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(pairs[i].value, want[i], 1e-10);
    }
}

TEST(Conjugate, Errors) {
    ComplexMatrix bad = identity(4);
    bad(1, 0) = 2.0;
    EXPECT_THROW((void)conjugate(identity(4), bad), Error);
    EXPECT_THROW((void)conjugate(identity(3), identity(4)), Error);
}

TEST(CorollaryProperty, FactorizableUnderNewIffConjugateUnderOld) {
    Rng rng(40);
    for (int trial = 0; trial < 50; ++trial) {
        const TensorType type(2 + trial % 2, 2);
        const auto d = type.target_dim();
        const TensorProductOperator a(type, random_unitary(d, rng), "a");
        const TensorProductOperator b(type, random_unitary(d, rng), "b");
        const ComplexMatrix w = relating_unitary(a, b);
        const ComplexMatrix l1 = random_matrix(type.d1, type.d1, rng);
        const ComplexMatrix l2 = random_matrix(type.d2, type.d2, rng);
        const ComplexMatrix local = b.lift(l1, l2);
        EXPECT_TRUE(factorize_operator(local, b).has_value());
        EXPECT_LT(max_abs_diff(conjugate(local, w), a.lift(l1, l2)), 1e-9);

        const ComplexMatrix generic = random_matrix(d, d, rng);
        EXPECT_EQ(factorize_operator(generic, b).has_value(),
                  factorize_operator(conjugate(generic, w), a).has_value());
    }
}

} // namespace
