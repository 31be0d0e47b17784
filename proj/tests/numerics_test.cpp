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
#include "tensorctx/errors.hpp"
#include "tensorctx/numerics.hpp"
#include "tensorctx/random.hpp"
#include "tensorctx/standard.hpp"

namespace {

using namespace tensorctx;
using namespace tensorctx::standard;
using testing_util::MatrixNear;
using testing_util::SameUpToPhase;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

TEST(Kron, IdentityTimesIdentity) {
    EXPECT_TRUE(MatrixNear(kron(identity(2), identity(2)), identity(4), 0.0));
}

TEST(Kron, DiagonalProduct) {
    ComplexMatrix want = ComplexMatrix::Zero(4, 4);
    want.diagonal() << 1, -1, -1, 1;
    EXPECT_TRUE(MatrixNear(kron(pauli_z(), pauli_z()), want, 0.0));
}

TEST(Kron, LexicographicVectors) {
    EXPECT_TRUE(MatrixNear(kron(ket1(), ket1()), basis(4, 3), 0.0));
    EXPECT_TRUE(MatrixNear(kron(ket0(), ket1()), basis(4, 1), 0.0));
}

TEST(Kron, MatchesLoopImplementation) {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix a = random_matrix(2 + trial % 2, 3 - trial % 2, rng);
        const ComplexMatrix b = random_matrix(3, 2, rng);
        EXPECT_TRUE(MatrixNear(kron(a, b), oracle::naive_kron(a, b), 1e-14));
    }
}

TEST(KronProperty, Bilinear) {
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index n = trial % 2 == 0 ? 2 : 3;
        const ComplexMatrix a = random_matrix(n, n, rng);
        const ComplexMatrix a2 = random_matrix(n, n, rng);
        const ComplexMatrix b = random_matrix(n, n, rng);
        const ComplexMatrix b2 = random_matrix(n, n, rng);
        const Complex alpha = rng.complex_normal();
        const Complex beta = rng.complex_normal();
        EXPECT_TRUE(MatrixNear(kron(alpha * a + beta * a2, b),
                               alpha * kron(a, b) + beta * kron(a2, b), 1e-12));
        EXPECT_TRUE(MatrixNear(kron(a, alpha * b + beta * b2),
                               alpha * kron(a, b) + beta * kron(a, b2), 1e-12));
    }
}

TEST(KronProperty, MixedProduct) {
    Rng rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix a = random_matrix(2, 3, rng);
        const ComplexMatrix c = random_matrix(3, 2, rng);
        const ComplexMatrix b = random_matrix(3, 2, rng);
        const ComplexMatrix d = random_matrix(2, 3, rng);
        const ComplexMatrix ac = a * c;
        const ComplexMatrix bd = b * d;
        EXPECT_TRUE(MatrixNear(kron(a, b) * kron(c, d), kron(ac, bd), 1e-12));
    }
}

TEST(Dagger, Examples) {
    EXPECT_TRUE(MatrixNear(dagger(identity(4)), identity(4), 0.0));
    EXPECT_TRUE(MatrixNear(dagger(cnot()), cnot(), 0.0));
    ComplexMatrix m(2, 2);
    m << 0, Complex(0, 1), 0, 0;
    ComplexMatrix want(2, 2);
    want << 0, 0, Complex(0, -1), 0;
    EXPECT_TRUE(MatrixNear(dagger(m), want, 0.0));
}

TEST(DaggerProperty, InvolutionIsExact) {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix a = random_matrix(3, 4, rng);
        EXPECT_TRUE((dagger(dagger(a)).array() == a.array()).all());
    }
}

TEST(Svd, Examples) {
    EXPECT_TRUE(MatrixNear(svd(identity(2)).sigma.cast<Complex>(),
                           ComplexVector::Ones(2), 1e-14));
    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = 3.0;
    const auto r = svd(d);
    EXPECT_NEAR(r.sigma(0), 3.0, 1e-14);
    EXPECT_NEAR(r.sigma(1), 0.0, 1e-14);
}

TEST(Svd, BellUnfoldingAgainstCharacteristicPolynomial) {
    const ComplexVector bell = (basis(4, 0) + basis(4, 3)) * kInvSqrt2;
    const auto m = oracle::coefficient_matrix(bell, 2, 2);
    const auto want = oracle::singular_values_2x2(m);
    const auto got = svd(m).sigma;
    ASSERT_EQ(got.size(), 2);
    EXPECT_NEAR(got(0), want[0], 1e-12);
    EXPECT_NEAR(got(1), want[1], 1e-12);
    EXPECT_NEAR(want[0], kInvSqrt2, 1e-12);
    EXPECT_NEAR(want[1], kInvSqrt2, 1e-12);
}

TEST(Svd, Random2x2AgainstCharacteristicPolynomial) {
    Rng rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        const ComplexMatrix m = random_matrix(2, 2, rng);
        const auto want = oracle::singular_values_2x2(m);
        const auto got = svd(m).sigma;
        EXPECT_NEAR(got(0), want[0], 1e-10);
        EXPECT_NEAR(got(1), want[1], 1e-10);
    }
}

TEST(SvdProperty, ReconstructionUpTo8x8) {
    Rng rng(7);
    for (Eigen::Index rows = 1; rows <= 8; ++rows) {
        for (Eigen::Index cols = 1; cols <= 8; ++cols) {
            const ComplexMatrix m = random_matrix(rows, cols, rng);
            const auto r = svd(m);
            const ComplexMatrix back = r.u * r.sigma.cast<Complex>().asDiagonal() * r.v.adjoint();
            EXPECT_LT(max_abs_diff(m, back), kReconstructionTolerance);
            const auto k = std::min(rows, cols);
            EXPECT_LT(max_abs_diff(r.u.adjoint() * r.u, identity(k)), 1e-12);
            EXPECT_LT(max_abs_diff(r.v.adjoint() * r.v, identity(k)), 1e-12);
            for (Eigen::Index i = 1; i < k; ++i) {
                EXPECT_GE(r.sigma(i - 1), r.sigma(i));
            }
        }
    }
}

TEST(SvdProperty, RankDeficientReconstruction) {
    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix m = random_matrix(6, 2, rng) * random_matrix(2, 6, rng);
        const auto r = svd(m);
        EXPECT_EQ(numerical_rank(r.sigma), 2u);
        const ComplexMatrix back = r.u * r.sigma.cast<Complex>().asDiagonal() * r.v.adjoint();
        EXPECT_LT(max_abs_diff(m, back), kReconstructionTolerance);
    }
}

TEST(EigHermitian, PauliZ) {
    const auto pairs = eig_hermitian(pauli_z());
    ASSERT_EQ(pairs.size(), 2u);
    EXPECT_NEAR(pairs[0].value, 1.0, 1e-14);
    EXPECT_NEAR(pairs[1].value, -1.0, 1e-14);
    EXPECT_TRUE(MatrixNear(pairs[0].vector, ket0(), 1e-14));
    EXPECT_TRUE(MatrixNear(pairs[1].vector, ket1(), 1e-14));
}

TEST(EigHermitian, ObservableSHasDoubleEigenvalues) {
    const auto pairs = eig_hermitian(bell_derived_twist());
    ASSERT_EQ(pairs.size(), 4u);
    const double want[] = {1, 1, -1, -1};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(pairs[i].value, want[i], 1e-10);
    }
}

TEST(EigHermitian, CnotAgainstFaddeevLeVerrier) {
    const auto coeffs = oracle::characteristic_polynomial(cnot());
    // x^4 - 2x^3 + 2x - 1 = (x - 1)^3 (x + 1)
    const Complex want[] = {-1, 2, 0, -2, 1};
    ASSERT_EQ(coeffs.size(), 5u);
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_NEAR(std::abs(coeffs[i] - want[i]), 0.0, 1e-12) << "coefficient " << i;
    }
    const auto pairs = eig_hermitian(cnot());
    ASSERT_EQ(pairs.size(), 4u);
    const double values[] = {1, 1, 1, -1};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(pairs[i].value, values[i], 1e-12);
        EXPECT_NEAR(std::abs(oracle::evaluate(coeffs, pairs[i].value)), 0.0, 1e-10);
    }
}

TEST(EigHermitian, DegenerateTieBreakIsDeterministic) {
    const auto pairs = eig_hermitian(identity(3));
    ASSERT_EQ(pairs.size(), 3u);
    for (Eigen::Index i = 0; i < 3; ++i) {
        EXPECT_TRUE(MatrixNear(pairs[static_cast<std::size_t>(i)].vector, basis(3, i), 1e-12));
    }
    // Pivot entries are real and positive; clusters are ordered by pivot index.
    for (const auto &p : eig_hermitian(cnot())) {
        const auto k = argmax_abs(p.vector);
        EXPECT_GT(p.vector(k).real(), 0.0);
        EXPECT_NEAR(p.vector(k).imag(), 0.0, 1e-14);
    }
    const auto cx = eig_hermitian(cnot());
    EXPECT_LT(argmax_abs(cx[0].vector), argmax_abs(cx[1].vector));
    EXPECT_LT(argmax_abs(cx[1].vector), argmax_abs(cx[2].vector));
}

TEST(EigHermitian, RejectsNonHermitian) {
    ComplexMatrix m(2, 2);
    m << 0, 1, 0, 0;
    try {
        (void)eig_hermitian(m);
        FAIL() << "expected NotHermitian";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotHermitian);
    }
}

TEST(EigHermitianProperty, SpectralReconstructionAndCompleteness) {
    Rng rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index n = 1 + trial % 8;
        const ComplexMatrix m = random_hermitian(n, rng);
        const auto pairs = eig_hermitian(m);
        ComplexMatrix sum = ComplexMatrix::Zero(n, n);
        ComplexMatrix projectors = ComplexMatrix::Zero(n, n);
        for (const auto &p : pairs) {
            sum += p.value * p.vector * p.vector.adjoint();
            projectors += p.vector * p.vector.adjoint();
            EXPECT_LT((m * p.vector - p.value * p.vector).norm(), 1e-9);
        }
        EXPECT_LT(max_abs_diff(sum, m), kReconstructionTolerance);
        EXPECT_LT(max_abs_diff(projectors, identity(n)), kReconstructionTolerance);
        for (std::size_t i = 1; i < pairs.size(); ++i) {
            EXPECT_GE(pairs[i - 1].value, pairs[i].value);
        }
    }
}

TEST(EigHermitianProperty, DegenerateSpectraStayComplete) {
    Rng rng(10);
    for (int trial = 0; trial < 30; ++trial) {
        const ComplexMatrix u = random_unitary(4, rng);
        ComplexMatrix d = ComplexMatrix::Zero(4, 4);
        d.diagonal() << 2, 2, -1, -1;
        const ComplexMatrix m = u * d * u.adjoint();
        const auto pairs = eig_hermitian(m);
        ComplexMatrix sum = ComplexMatrix::Zero(4, 4);
        for (const auto &p : pairs) {
            sum += p.vector * p.vector.adjoint();
        }
        EXPECT_LT(max_abs_diff(sum, identity(4)), kReconstructionTolerance);
        EXPECT_NEAR(pairs[0].value, 2.0, 1e-10);
        EXPECT_NEAR(pairs[3].value, -1.0, 1e-10);
    }
}

TEST(ApproxEqPhase, Examples) {
    const Tolerance tol;
    EXPECT_TRUE(approx_eq_phase(ket0(), std::polar(1.0, M_PI / 3) * ket0(), tol));
    EXPECT_FALSE(approx_eq_phase(ket0(), ket1(), tol));
    EXPECT_TRUE(approx_eq_phase(ket_plus(), -ket_plus(), tol));
}

TEST(ApproxEqPhase, DimensionMismatch) {
    try {
        (void)approx_eq_phase(ket0(), basis(3, 0), Tolerance{});
        FAIL() << "expected DimensionMismatch";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
}

TEST(Tolerance, DefaultsAndValidation) {
    EXPECT_EQ(Tolerance{}.eps, 1e-10);
    EXPECT_EQ(Tolerance(0.0).eps, 0.0);
    EXPECT_THROW(Tolerance(-1.0), Error);
}

TEST(Predicates, UnitaryAndHermitian) {
    EXPECT_TRUE(is_unitary(cnot(), 1e-12));
    EXPECT_TRUE(is_unitary(bell_derived_twist(), 1e-12));
    EXPECT_TRUE(is_hermitian(bell_derived_twist(), 1e-12));
    ComplexMatrix m = identity(2);
    m(0, 1) = 0.5;
    EXPECT_FALSE(is_unitary(m, 1e-8));
    EXPECT_FALSE(is_hermitian(m, 1e-8));
}

TEST(Random, DeterministicForSeed) {
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 10; ++i) {
        EXPECT_EQ(a.next_u64(), b.next_u64());
    }
    Rng c(1);
    Rng d(1);
    EXPECT_TRUE((random_unitary(3, c).array() == random_unitary(3, d).array()).all());
    EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
    EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST(Random, GeneratorsHaveTheirShapes) {
    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix u = random_unitary(5, rng);
        EXPECT_TRUE(is_unitary(u, 1e-12));
        EXPECT_TRUE(is_hermitian(random_hermitian(4, rng), 0.0));
        EXPECT_NEAR(random_state(6, rng).norm(), 1.0, 1e-14);
        const double x = rng.uniform();
        EXPECT_GE(x, 0.0);
        EXPECT_LT(x, 1.0);
    }
}

} // namespace
