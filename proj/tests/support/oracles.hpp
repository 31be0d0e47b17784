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

// Brute-force reference computations used to cross-check the library. None of
// these call into tensorctx; they use explicit loops and closed forms.
namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

Matrix naive_product(const Matrix &a, const Matrix &b);
Matrix naive_adjoint(const Matrix &a);
Matrix naive_kron(const Matrix &a, const Matrix &b);
double max_abs(const Matrix &a);

/// Singular values (descending) of a 2x2 matrix from the characteristic
/// polynomial of M M^dagger.
std::vector<double> singular_values_2x2(const Matrix &m);

/// Coefficients c_0 .. c_n of det(x I - M) by Faddeev-LeVerrier (c_n = 1).
std::vector<Complex> characteristic_polynomial(const Matrix &m);
Complex evaluate(const std::vector<Complex> &coeffs, Complex x);

/// Row-major reshape of a length d1*d2 vector.
Matrix coefficient_matrix(const Vector &v, int d1, int d2);

/// Rank by Gaussian elimination with full pivoting; pivots below tol count as
/// zero.
std::size_t elimination_rank(Matrix m, double tol);

/// Rank of M through its Gram matrix M M^dagger (pivot threshold tol^2).
std::size_t gram_rank(const Matrix &m, double tol);

/// Whether a 4x4 matrix equals kron(A, B) for 2x2 A, B. Every nonzero 2x2
/// block is tried as B; A is read off by projection and the product checked.
struct BlockFactor {
    bool found = false;
    Matrix a;
    Matrix b;
};
BlockFactor search_2x2_factors(const Matrix &m, double tol);

/// Probability of each (i, j) outcome pair on A1, A2 for a three-qubit state
/// indexed 4i + 2j + k, summing squared amplitudes over k.
std::vector<double> branch_probabilities(const Vector &state);

} // namespace oracle
