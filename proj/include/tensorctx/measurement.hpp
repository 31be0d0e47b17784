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
#include <optional>
#include <vector>

#include "tensorctx/numerics.hpp"

namespace tensorctx {

/// Eigenvalues closer than this are merged into one spectral projector.
inline constexpr double kDegeneracyThreshold = 1e-8;

struct SpectralComponent {
    double eigenvalue = 0.0;
    ComplexMatrix projector;
    std::size_t multiplicity = 0;
};

/// Hermitian matrix with its spectral decomposition, eigenvalues descending.
class Observable {
  public:
    /// Throws NotHermitian.
    static Observable from_matrix(const ComplexMatrix &matrix, Tolerance tol = {});

    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return matrix_; }
    [[nodiscard]] const std::vector<SpectralComponent> &spectrum() const noexcept {
        return spectrum_;
    }
    [[nodiscard]] Eigen::Index dim() const noexcept { return matrix_.rows(); }

  private:
    Observable() = default;

    ComplexMatrix matrix_;
    std::vector<SpectralComponent> spectrum_;
};

Observable observable_from(const ComplexMatrix &matrix, Tolerance tol = {});

struct MeasurementResult {
    double outcome = 0.0;
    double probability = 0.0;
    /// Absent when the branch has (numerically) zero probability.
    std::optional<ComplexVector> post_state;
};

/// One entry per spectral projector, in spectrum order.
std::vector<MeasurementResult> measure(const ComplexVector &state,
                                       const Observable &obs,
                                       Tolerance tol = {});

/// Draws one outcome of `measure` with Rng(seed). Same seed, same result.
MeasurementResult sample(const ComplexVector &state, const Observable &obs,
                         std::uint64_t seed, Tolerance tol = {});

} // namespace tensorctx
