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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tensorctx/composition.hpp"
#include "tensorctx/measurement.hpp"
#include "tensorctx/numerics.hpp"
#include "tensorctx/standard.hpp"
#include "tensorctx/tensor_op.hpp"

namespace tensorctx {

enum class GateKind { unitary, measurement };

/// Classical control: the gate fires only when the given measurement (by
/// position among the circuit's measurement gates) produced `outcome`.
struct Condition {
    std::size_t measurement = 0;
    double outcome = 0.0;

    friend bool operator==(const Condition &, const Condition &) = default;
};

/// A gate or observable expressed relative to one of the circuit's frames.
/// One factor: a matrix on the whole space written in the frame's product
/// basis. Two factors: slot operators (reference bases of the slots),
/// lifted through the frame.
struct Gate {
    GateKind kind = GateKind::unitary;
    std::string label;
    std::string frame;
    std::vector<ComplexMatrix> factors;
    std::optional<Condition> condition;
};

/// A tensor operator onto the circuit's whole state space, under a name
/// gates can refer to.
struct Frame {
    std::string name;
    TensorProductOperator op;
};

class Circuit {
  public:
    /// Validates frames, gate shapes, unitarity/hermiticity, conditions and
    /// the initial state's norm.
    Circuit(std::string label, std::vector<Frame> frames,
            ComplexVector initial_state, std::vector<Gate> gates = {});

    [[nodiscard]] const std::string &label() const noexcept { return label_; }
    [[nodiscard]] const std::vector<Frame> &frames() const noexcept { return frames_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept { return gates_; }
    [[nodiscard]] const ComplexVector &initial_state() const noexcept {
        return initial_state_;
    }
    [[nodiscard]] Eigen::Index global_dim() const noexcept {
        return initial_state_.size();
    }

    [[nodiscard]] const Frame &frame(const std::string &name) const;

    /// The gate's matrix in the global reference basis.
    [[nodiscard]] ComplexMatrix effective_matrix(const Gate &gate) const;

    [[nodiscard]] Circuit with_gates(std::vector<Gate> gates) const;

  private:
    std::string label_;
    std::vector<Frame> frames_;
    ComplexVector initial_state_;
    std::vector<Gate> gates_;
};

struct Checkpoint {
    std::string label;
    ComplexVector state;
};

struct MeasurementRecord {
    std::string gate;
    std::size_t gate_index = 0;
    MeasurementResult result;
};

struct Trace {
    std::vector<Checkpoint> checkpoints; ///< "initial", then one per gate
    std::vector<MeasurementRecord> measurement_records;
};

/// Sub-seed for the measurement at gate position k.
std::uint64_t measurement_seed(std::uint64_t seed, std::size_t gate_index) noexcept;

Trace simulate(const Circuit &c, std::uint64_t seed, Tolerance tol = {});

/// Every measurement history with nonzero probability.
struct Branch {
    std::vector<double> outcomes;
    double probability = 1.0;
    Trace trace;
};

std::vector<Branch> enumerate_branches(const Circuit &c, Tolerance tol = {});

/// Change of tensor operator. Each entry replaces the operator of the named
/// frame; all replacements must induce the same global unitary W (else
/// TypeMismatch). Frames not listed are twisted by W as well, gate
/// descriptions are kept, and the initial state becomes W * initial. Every
/// effective gate matrix M therefore becomes W M W^dagger.
Circuit transform_circuit(const Circuit &c,
                          const std::map<std::string, TensorProductOperator> &new_ops);

/// Result of moving a bipartite circuit's state onto a shadow pair.
/// Parts are Q1, Q2, Q1', Q2' with global index b_ijkl <-> 8i + 4j + 2k + l
/// (for qubits). Frame "pairs" joins (Q1, Q2) with (Q1', Q2'); both slots are
/// wired through the circuit's own operator so the qubit-wise swaps carry the
/// pair vector across unchanged. Frame "bridge" joins (Q1, Q1') with
/// (Q2, Q2') through the bridge operator. `partner_op` governs how the
/// shadow pair's vector splits into qubit states.
struct BridgedCircuit {
    Circuit circuit;
    MultipartiteContext context;
    TensorProductOperator partner_op;
};

inline constexpr const char *kPairsFrame = "pairs";
inline constexpr const char *kBridgeFrame = "bridge";

BridgedCircuit swap_bridge(const Circuit &c, const TensorProductOperator &partner_op,
                           const TensorProductOperator &bridge_op,
                           const ComplexMatrix &swap_gate = standard::swap());

/// Vectors held by the original and shadow pairs, when the global state is a
/// product across the bridge cut.
std::optional<std::pair<ComplexVector, ComplexVector>>
bridge_split(const BridgedCircuit &bridged, const ComplexVector &global);

/// Teleportation of a|0> + b|1> from A1 to B over the three-qubit context of
/// standard_context_3q(t12, t13, t23). Checkpoints after "initial", the CX
/// and the H gate are phi1, phi2, phi3. Throws NotNormalized.
Circuit build_teleportation(const TensorProductOperator &t12,
                            const TensorProductOperator &t13,
                            const TensorProductOperator &t23, Complex a,
                            Complex b);

} // namespace tensorctx
