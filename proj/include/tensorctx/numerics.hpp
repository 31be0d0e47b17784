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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace tensorctx {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Absolute tolerance used by the approximate predicates.
struct Tolerance {
    double eps = 1e-10;

    constexpr Tolerance() = default;
    explicit Tolerance(double value);
};

/// Threshold for reconstruction-style assertions (products of several
/// operators, spectral sums).
inline constexpr double kReconstructionTolerance = 1e-9;

/// Threshold applied when accepting user-supplied unitaries, loose enough
/// for matrices typed into text files with rounded entries.
inline constexpr double kUnitarityTolerance = 1e-8;

/// Relative/absolute cut-offs used for numerical rank.
inline constexpr double kRankRelativeThreshold = 1e-8;
inline constexpr double kRankAbsoluteFloor = 1e-12;

/// Kronecker product with lexicographic block layout:
/// (i * B.rows + k, j * B.cols + l) -> A(i, j) * B(k, l).
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector kron(const ComplexVector &x, const ComplexVector &y);

ComplexMatrix dagger(const ComplexMatrix &a);

struct SvdResult {
    ComplexMatrix u;  ///< rows x k, orthonormal columns
    RealVector sigma; ///< k = min(rows, cols), descending
    ComplexMatrix v;  ///< cols x k, orthonormal columns
};

/// M = u * diag(sigma) * v^dagger. Each singular pair is phase-normalized so
/// the largest-magnitude entry of the left vector is real and positive.
SvdResult svd(const ComplexMatrix &m);

struct EigenPair {
    double value;
    ComplexVector vector;
};

/// Spectral decomposition of a Hermitian matrix, sorted by descending
/// eigenvalue. Inside a degenerate cluster the basis is rebuilt from the
/// projections of the standard basis vectors, ordered by the index of each
/// vector's largest-magnitude component, and phase-fixed so that component
/// is real and positive.
std::vector<EigenPair> eig_hermitian(const ComplexMatrix &m,
                                     Tolerance tol = {});

/// True iff ||x - c y||_2 <= tol.eps for the unit c read off the
/// largest-magnitude entry of y.
bool approx_eq_phase(const ComplexVector &x, const ComplexVector &y,
                     Tolerance tol = {});

double max_abs(const ComplexMatrix &m);
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

bool is_square(const ComplexMatrix &m) noexcept;
bool is_finite(const ComplexMatrix &m);
bool is_hermitian(const ComplexMatrix &m, double eps);
bool is_unitary(const ComplexMatrix &m, double eps);

/// Number of singular values above max(kRankRelativeThreshold * sigma_max,
/// kRankAbsoluteFloor).
std::size_t numerical_rank(const RealVector &sigma);

/// Index of the entry with the largest modulus; ties keep the lowest index.
Eigen::Index argmax_abs(const ComplexVector &v);

/// Multiply v by the unit scalar that makes its largest-magnitude entry real
/// and nonnegative. Returns that scalar.
Complex fix_phase(ComplexVector &v);

void require_finite(const ComplexMatrix &m, const char *what);
void require_square(const ComplexMatrix &m, const char *what);
void require_unitary(const ComplexMatrix &m, const char *what,
                     double eps = kUnitarityTolerance);

} // namespace tensorctx
