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
#include <random>

#include "tensorctx/numerics.hpp"

namespace tensorctx {

/// SplitMix64 finalizer. Used to derive independent sub-seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Sub-seed for stream `index` under `seed`:
/// splitmix64(seed ^ splitmix64(index + 0x9E3779B97F4A7C15)).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Deterministic pseudorandom stream: std::mt19937_64 seeded with
/// splitmix64(seed). Doubles use the top 53 bits, normals use Box-Muller,
/// so sequences are identical across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform in [0, 1).
    double uniform();
    double normal();
    Complex complex_normal();

  private:
    std::mt19937_64 engine_;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

ComplexMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, Rng &rng);
ComplexVector random_vector(Eigen::Index dim, Rng &rng);
/// Unit-norm random vector.
ComplexVector random_state(Eigen::Index dim, Rng &rng);
/// Haar-distributed unitary (QR of a complex Gaussian matrix with the
/// diagonal phase correction).
ComplexMatrix random_unitary(Eigen::Index dim, Rng &rng);
ComplexMatrix random_hermitian(Eigen::Index dim, Rng &rng);

} // namespace tensorctx
