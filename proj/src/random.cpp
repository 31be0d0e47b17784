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

#include "tensorctx/random.hpp"

#include <cmath>
#include <numbers>

namespace tensorctx {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31U);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return splitmix64(seed ^ splitmix64(index + 0x9E3779B97F4A7C15ULL));
}

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11U) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_normal_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) {
        u1 = uniform();
    }
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_normal_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
}

ComplexMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, Rng &rng) {
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            m(i, j) = rng.complex_normal();
        }
    }
    return m;
}

ComplexVector random_vector(Eigen::Index dim, Rng &rng) {
    ComplexVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        v(i) = rng.complex_normal();
    }
    return v;
}

ComplexVector random_state(Eigen::Index dim, Rng &rng) {
    ComplexVector v = random_vector(dim, rng);
    return v / v.norm();
}

ComplexMatrix random_unitary(Eigen::Index dim, Rng &rng) {
    const ComplexMatrix g = random_matrix(dim, dim, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < dim; ++j) {
        const Complex d = r(j, j);
        if (std::abs(d) > 0.0) {
            q.col(j) *= d / std::abs(d);
        }
    }
    return q;
}

ComplexMatrix random_hermitian(Eigen::Index dim, Rng &rng) {
    const ComplexMatrix g = random_matrix(dim, dim, rng);
    return 0.5 * (g + g.adjoint());
}

} // namespace tensorctx
