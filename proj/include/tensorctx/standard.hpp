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

// Common single- and two-qubit vectors and gates, all written in the
// standard (computational) basis.

#include <cmath>

#include "tensorctx/numerics.hpp"

namespace tensorctx::standard {

inline ComplexVector basis(Eigen::Index dim, Eigen::Index index) {
    ComplexVector v = ComplexVector::Zero(dim);
    v(index) = 1.0;
    return v;
}

inline ComplexVector ket0() { return basis(2, 0); }
inline ComplexVector ket1() { return basis(2, 1); }

inline ComplexVector ket_plus() {
    return (ket0() + ket1()) / std::sqrt(2.0);
}

inline ComplexVector ket_minus() {
    return (ket0() - ket1()) / std::sqrt(2.0);
}

inline ComplexVector vec(std::initializer_list<Complex> entries) {
    ComplexVector v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (const auto &e : entries) {
        v(i++) = e;
    }
    return v;
}

inline ComplexMatrix identity(Eigen::Index dim) {
    return ComplexMatrix::Identity(dim, dim);
}

inline ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

inline ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

inline ComplexMatrix hadamard() {
    ComplexMatrix m(2, 2);
    m << 1, 1, 1, -1;
    return m / std::sqrt(2.0);
}

/// Controlled-not with the first factor as control.
inline ComplexMatrix cnot() {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 3) = 1;
    m(3, 2) = 1;
    return m;
}

inline ComplexMatrix swap() {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 2) = 1;
    m(2, 1) = 1;
    m(3, 3) = 1;
    return m;
}

/// Bell-basis change used for the A1/A2 pair: columns are beta10, beta11,
/// -beta01, -beta00 in the standard two-qubit basis. Real symmetric and
/// self-inverse.
inline ComplexMatrix bell_derived_twist() {
    ComplexMatrix m(4, 4);
    m << 1, 0, 0, -1, //
        0, 1, -1, 0,  //
        0, -1, -1, 0, //
        -1, 0, 0, -1;
    return m / std::sqrt(2.0);
}

} // namespace tensorctx::standard
