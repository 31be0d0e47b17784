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

#include "tensorctx/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "tensorctx/analysis.hpp"
#include "tensorctx/errors.hpp"
#include "tensorctx/random.hpp"

namespace tensorctx {

namespace {

constexpr double kOutcomeMatch = 1e-6;

std::string gate_name(const Gate &g, std::size_t index) {
    return g.label.empty() ? "gate " + std::to_string(index) : g.label;
}

bool condition_holds(const Gate &g, const std::vector<MeasurementRecord> &records) {
    if (!g.condition) {
        return true;
    }
    const auto &cond = *g.condition;
    return std::abs(records.at(cond.measurement).result.outcome - cond.outcome) <
           kOutcomeMatch;
}

} // namespace

Circuit::Circuit(std::string label, std::vector<Frame> frames,
                 ComplexVector initial_state, std::vector<Gate> gates)
    : label_(std::move(label)), frames_(std::move(frames)),
      initial_state_(std::move(initial_state)), gates_(std::move(gates)) {
    if (frames_.empty()) {
        raise(ErrorCode::InvalidArgument,
              "circuit '" + label_ + "' declares no frames");
    }
    std::set<std::string> names;
    for (const auto &f : frames_) {
        if (!names.insert(f.name).second) {
            raise(ErrorCode::InvalidArgument, "duplicate frame '" + f.name + "'");
        }
        if (f.op.type().target_dim() != initial_state_.size()) {
            raise(ErrorCode::DimensionMismatch,
                  "frame '" + f.name + "' targets " +
                      std::to_string(f.op.type().target_dim()) +
                      " dimensions but the initial state has " +
                      std::to_string(initial_state_.size()));
        }
    }
    require_finite(initial_state_, "initial state");
    if (std::abs(initial_state_.norm() - 1.0) > 1e-8) {
        raise(ErrorCode::NotNormalized,
              "initial state of '" + label_ + "' has norm " +
                  std::to_string(initial_state_.norm()));
    }

    std::size_t measurements = 0;
    for (std::size_t k = 0; k < gates_.size(); ++k) {
        const auto &g = gates_[k];
        const ComplexMatrix m = effective_matrix(g);
        if (g.kind == GateKind::unitary && !is_unitary(m, kUnitarityTolerance)) {
            raise(ErrorCode::NotUnitary, gate_name(g, k) + " is not unitary");
        }
        if (g.kind == GateKind::measurement && !is_hermitian(m, 1e-8)) {
            raise(ErrorCode::NotHermitian,
                  gate_name(g, k) + " is not a Hermitian observable");
        }
        if (g.condition && g.condition->measurement >= measurements) {
            raise(ErrorCode::InvalidArgument,
                  gate_name(g, k) + " is conditioned on measurement " +
                      std::to_string(g.condition->measurement) +
                      ", which has not happened yet");
        }
        if (g.kind == GateKind::measurement) {
            ++measurements;
        }
    }
}

const Frame &Circuit::frame(const std::string &name) const {
    for (const auto &f : frames_) {
        if (f.name == name) {
            return f;
        }
    }
    throw ResolutionError("circuit '" + label_ + "' has no frame '" + name + "'");
}

ComplexMatrix Circuit::effective_matrix(const Gate &gate) const {
    const auto &op = frame(gate.frame).op;
    for (const auto &f : gate.factors) {
        require_finite(f, "gate factor");
    }
    switch (gate.factors.size()) {
    case 1:
        return op.represent(gate.factors.front());
    case 2:
        return op.lift(gate.factors[0], gate.factors[1]);
    default:
        raise(ErrorCode::InvalidArgument,
              "gate '" + gate.label + "' must have one or two factors");
    }
}

Circuit Circuit::with_gates(std::vector<Gate> gates) const {
    return {label_, frames_, initial_state_, std::move(gates)};
}

std::uint64_t measurement_seed(std::uint64_t seed, std::size_t gate_index) noexcept {
    return derive_seed(seed, gate_index);
}

Trace simulate(const Circuit &c, std::uint64_t seed, Tolerance tol) {
    Trace trace;
    ComplexVector state = c.initial_state();
    trace.checkpoints.push_back({"initial", state});
    for (std::size_t k = 0; k < c.gates().size(); ++k) {
        const auto &g = c.gates()[k];
        if (condition_holds(g, trace.measurement_records)) {
            const ComplexMatrix m = c.effective_matrix(g);
            if (g.kind == GateKind::unitary) {
                state = m * state;
            } else {
                auto result = sample(state, observable_from(m, Tolerance(1e-8)),
                                     measurement_seed(seed, k), tol);
                state = *result.post_state;
                trace.measurement_records.push_back({gate_name(g, k), k, std::move(result)});
            }
        } else if (g.kind == GateKind::measurement) {
            raise(ErrorCode::InvalidArgument, "measurements cannot be conditioned");
        }
        trace.checkpoints.push_back({gate_name(g, k), state});
    }
    return trace;
}

namespace {

void explore(const Circuit &c, std::size_t k, ComplexVector state, Branch branch,
             Tolerance tol, std::vector<Branch> &out) {
    for (; k < c.gates().size(); ++k) {
        const auto &g = c.gates()[k];
        if (!condition_holds(g, branch.trace.measurement_records)) {
            branch.trace.checkpoints.push_back({gate_name(g, k), state});
            continue;
        }
        const ComplexMatrix m = c.effective_matrix(g);
        if (g.kind == GateKind::unitary) {
            state = m * state;
            branch.trace.checkpoints.push_back({gate_name(g, k), state});
            continue;
        }
        const auto results = measure(state, observable_from(m, Tolerance(1e-8)), tol);
        for (const auto &r : results) {
            if (!r.post_state) {
                continue;
            }
            Branch next = branch;
            next.outcomes.push_back(r.outcome);
            next.probability *= r.probability;
            next.trace.measurement_records.push_back({gate_name(g, k), k, r});
            next.trace.checkpoints.push_back({gate_name(g, k), *r.post_state});
            explore(c, k + 1, *r.post_state, std::move(next), tol, out);
        }
        return;
    }
    out.push_back(std::move(branch));
}

} // namespace

std::vector<Branch> enumerate_branches(const Circuit &c, Tolerance tol) {
    std::vector<Branch> out;
    Branch root;
    root.trace.checkpoints.push_back({"initial", c.initial_state()});
    explore(c, 0, c.initial_state(), std::move(root), tol, out);
    return out;
}

Circuit transform_circuit(const Circuit &c,
                          const std::map<std::string, TensorProductOperator> &new_ops) {
    if (new_ops.empty()) {
        return c;
    }
    std::optional<ComplexMatrix> w;
    for (const auto &[name, op] : new_ops) {
        const auto &old = c.frame(name).op;
        const ComplexMatrix candidate = relating_unitary(old, op);
        if (w && max_abs(*w - candidate) > kUnitarityTolerance) {
            raise(ErrorCode::TypeMismatch,
                  "replacement for frame '" + name +
                      "' implies a different change of basis than the others");
        }
        if (!w) {
            w = candidate;
        }
    }
    std::vector<Frame> frames;
    frames.reserve(c.frames().size());
    for (const auto &f : c.frames()) {
        const auto it = new_ops.find(f.name);
        if (it != new_ops.end()) {
            frames.push_back({f.name, it->second});
        } else {
            frames.push_back({f.name, from_twist(f.op, *w, f.op.label())});
        }
    }
    ComplexVector initial = *w * c.initial_state();
    return {c.label(), std::move(frames), std::move(initial), c.gates()};
}

BridgedCircuit swap_bridge(const Circuit &c, const TensorProductOperator &partner_op,
                           const TensorProductOperator &bridge_op,
                           const ComplexMatrix &swap_gate) {
    const auto &wiring = c.frames().front().op;
    const TensorType type = wiring.type();
    for (const auto &f : c.frames()) {
        if (f.op.type() != type) {
            raise(ErrorCode::TypeMismatch,
                  "swap_bridge needs a bipartite circuit; frame '" + f.name +
                      "' has type " + to_string(f.op.type()));
        }
    }
    if (partner_op.type() != type) {
        raise(ErrorCode::TypeMismatch,
              "partner operator '" + partner_op.label() + "' has type " +
                  to_string(partner_op.type()) + ", circuit uses " +
                  to_string(type));
    }
    if (type.d1 != type.d2 || bridge_op.type() != TensorType(type.d1, type.d1)) {
        raise(ErrorCode::TypeMismatch,
              "bridge operator '" + bridge_op.label() +
                  "' must join two copies of each part");
    }
    const auto d = type.d1;
    if (swap_gate.rows() != d * d || swap_gate.cols() != d * d) {
        raise(ErrorCode::DimensionMismatch, "swap gate does not act on a part pair");
    }

    MultipartiteContext ctx(
        {{"Q1", d}, {"Q2", d}, {"Q1'", d}, {"Q2'", d}},
        {{"Q1", "Q2", wiring},
         {"Q1'", "Q2'", wiring.relabeled(wiring.label() + " (shadow wiring)")},
         {"Q1", "Q1'", bridge_op},
         {"Q2", "Q2'", bridge_op}});
    const auto &pairs = ctx.add_pairing(kPairsFrame, {"Q1", "Q2"}, {"Q1'", "Q2'"});
    const auto &bridge = ctx.add_pairing(kBridgeFrame, {"Q1", "Q1'"}, {"Q2", "Q2'"});

    const auto pair_dim = type.target_dim();
    const ComplexMatrix id = ComplexMatrix::Identity(pair_dim, pair_dim);
    std::vector<Gate> gates;
    for (const auto &g : c.gates()) {
        gates.push_back({g.kind, g.label, kPairsFrame, {c.effective_matrix(g), id},
                         g.condition});
    }
    const ComplexMatrix bridged_swap = bridge_op.represent(swap_gate);
    gates.push_back({GateKind::unitary, "swap Q1-Q1'", kBridgeFrame, {bridged_swap, id},
                     std::nullopt});
    gates.push_back({GateKind::unitary, "swap Q2-Q2'", kBridgeFrame, {id, bridged_swap},
                     std::nullopt});

    const ComplexVector shadow0 =
        partner_op.apply(standard::basis(d, 0), standard::basis(d, 0));
    ComplexVector initial = pairs.apply(c.initial_state(), shadow0);
    std::vector<Frame> frames{{kPairsFrame, pairs.op()}, {kBridgeFrame, bridge.op()}};
    Circuit circuit(c.label() + " (bridged)", std::move(frames), std::move(initial),
                    std::move(gates));
    return {std::move(circuit), std::move(ctx), partner_op};
}

std::optional<std::pair<ComplexVector, ComplexVector>>
bridge_split(const BridgedCircuit &bridged, const ComplexVector &global) {
    return factorize_state(global, bridged.context.pairing(kPairsFrame).op());
}

Circuit build_teleportation(const TensorProductOperator &t12,
                            const TensorProductOperator &t13,
                            const TensorProductOperator &t23, Complex a, Complex b) {
    const double norm2 = std::norm(a) + std::norm(b);
    if (std::abs(norm2 - 1.0) > 1e-8) {
        raise(ErrorCode::NotNormalized,
              "|a|^2 + |b|^2 = " + std::to_string(norm2) + ", expected 1");
    }
    const MultipartiteContext ctx = standard_context_3q(t12, t13, t23);
    const auto &b_a1a2 = ctx.pairing("B(A1A2)");
    const auto &a2_a1b = ctx.pairing("A2(A1B)");
    const auto &a1_a2b = ctx.pairing("A1(A2B)");

    using namespace standard;
    const ComplexVector bell =
        (t23.apply(ket0(), ket0()) + t23.apply(ket1(), ket1())) / std::sqrt(2.0);
    const ComplexVector input = a * ket0() + b * ket1();
    ComplexVector initial = a1_a2b.apply(bell, input);

    const ComplexMatrix i2 = identity(2);
    const ComplexMatrix i4 = identity(4);
    std::vector<Gate> gates{
        {GateKind::unitary, "CX(A1,A2)", b_a1a2.label(), {t12.represent(cnot()), i2}, {}},
        {GateKind::unitary, "H(A1)", a1_a2b.label(), {i4, hadamard()}, {}},
        {GateKind::measurement, "measure A1", a1_a2b.label(), {i4, pauli_z()}, {}},
        {GateKind::measurement, "measure A2", a2_a1b.label(), {i4, pauli_z()}, {}},
        {GateKind::unitary, "X^j(B)", b_a1a2.label(), {i4, pauli_x()}, Condition{1, -1.0}},
        {GateKind::unitary, "Z^i(B)", b_a1a2.label(), {i4, pauli_z()}, Condition{0, -1.0}},
    };
    std::vector<Frame> frames;
    for (const auto &p : ctx.pairings()) {
        frames.push_back({p.label(), p.op()});
    }
    return {"teleportation", std::move(frames), std::move(initial), std::move(gates)};
}

} // namespace tensorctx
