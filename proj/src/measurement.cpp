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

#include "tensorctx/measurement.hpp"

#include <cmath>
#include <string>

#include "tensorctx/errors.hpp"
#include "tensorctx/random.hpp"

namespace tensorctx {

Observable Observable::from_matrix(const ComplexMatrix &matrix, Tolerance tol) {
    const auto pairs = eig_hermitian(matrix, tol);
    Observable obs;
    obs.matrix_ = matrix;
    for (const auto &pair : pairs) {
        const ComplexMatrix outer = pair.vector * pair.vector.adjoint();
        if (!obs.spectrum_.empty() &&
            obs.spectrum_.back().eigenvalue - pair.value <= kDegeneracyThreshold) {
            auto &last = obs.spectrum_.back();
            const auto m = static_cast<double>(last.multiplicity);
            last.eigenvalue = (last.eigenvalue * m + pair.value) / (m + 1.0);
            last.projector += outer;
            ++last.multiplicity;
            continue;
        }
        obs.spectrum_.push_back({pair.value, outer, 1});
    }
    return obs;
}

Observable observable_from(const ComplexMatrix &matrix, Tolerance tol) {
    return Observable::from_matrix(matrix, tol);
}

namespace {

void require_state(const ComplexVector &state, const Observable &obs) {
    if (state.size() != obs.dim()) {
        raise(ErrorCode::DimensionMismatch,
              "state has dimension " + std::to_string(state.size()) +
                  ", observable acts on " + std::to_string(obs.dim()));
    }
    if (std::abs(state.norm() - 1.0) > 1e-8) {
        raise(ErrorCode::NotNormalized,
              "state norm is " + std::to_string(state.norm()));
    }
}

} // namespace

std::vector<MeasurementResult> measure(const ComplexVector &state,
                                       const Observable &obs, Tolerance tol) {
    require_state(state, obs);
    std::vector<MeasurementResult> out;
    out.reserve(obs.spectrum().size());
    for (const auto &component : obs.spectrum()) {
        const ComplexVector projected = component.projector * state;
        const double probability = projected.squaredNorm();
        MeasurementResult result{component.eigenvalue, probability, std::nullopt};
        if (probability > tol.eps) {
            result.post_state = projected / std::sqrt(probability);
        }
        out.push_back(std::move(result));
    }
    return out;
}

MeasurementResult sample(const ComplexVector &state, const Observable &obs,
                         std::uint64_t seed, Tolerance tol) {
    auto results = measure(state, obs, tol);
    Rng rng(seed);
    const double u = rng.uniform();
    double total = 0.0;
    for (const auto &r : results) {
        if (r.post_state) {
            total += r.probability;
        }
    }
    double cumulative = 0.0;
    MeasurementResult *last_defined = nullptr;
    for (auto &r : results) {
        if (!r.post_state) {
            continue;
        }
        last_defined = &r;
        cumulative += r.probability / total;
        if (u < cumulative) {
            return r;
        }
    }
    if (last_defined == nullptr) {
        raise(ErrorCode::NumericalFailure, "no outcome has positive probability");
    }
    return *last_defined;
}

} // namespace tensorctx
