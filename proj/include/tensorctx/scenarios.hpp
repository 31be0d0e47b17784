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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tensorctx/circuit.hpp"
#include "tensorctx/report.hpp"
#include "tensorctx/tensor_op.hpp"

/// Built-in two-qubit tensor operators, circuits and demos.
namespace tensorctx::builtin {

/// The canonical operator on two qubits.
TensorProductOperator tensor1();
/// CX composed with tensor1.
TensorProductOperator tensor2();
/// Operator whose basis images are the Bell-derived list
/// (|b10>, |b11>, -|b01>, -|b00>); its twist is S.
TensorProductOperator tensor3();

/// (t(|0>,|0>) + t(|1>,|1>)) / sqrt(2).
ComplexVector bell00(const TensorProductOperator &t);

/// H on the first qubit, then CX, from |0>,|0> under tensor1.
Circuit ct0a();
/// H on the first qubit only, from |0>,|0> under tensor2.
Circuit ct0b();

ComplexMatrix observable_s();
/// CX * S * CX.
ComplexMatrix observable_s_prime();

/// Teleportation with A1-A2 joined by tensor3, A1-B by tensor2 and A2-B by
/// tensor1.
Circuit teleportation(Complex a, Complex b);

/// Closed-form global states after state preparation, the CX and the H gate.
std::array<ComplexVector, 3> teleportation_states(Complex a, Complex b);

std::vector<std::string> demo_names();

/// Throws InvalidArgument for an unknown name.
Report run_demo(const std::string &name, std::uint64_t seed, Tolerance tol = {});

} // namespace tensorctx::builtin
