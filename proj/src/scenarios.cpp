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

#include "tensorctx/scenarios.hpp"

#include <cmath>

#include "tensorctx/analysis.hpp"
#include "tensorctx/errors.hpp"
#include "tensorctx/measurement.hpp"
#include "tensorctx/standard.hpp"

namespace tensorctx::builtin {

using namespace standard;

namespace {

ComplexVector bell(int x, int y) {
    const double s = std::sqrt(0.5);
    const double sign = x == 0 ? 1.0 : -1.0;
    return y == 0 ? ComplexVector(s * (basis(4, 0) + sign * basis(4, 3)))
                  : ComplexVector(s * (basis(4, 1) + sign * basis(4, 2)));
}

ComplexVector b3(int i, int j, int k) { return basis(8, 4 * i + 2 * j + k); }

} // namespace

TensorProductOperator tensor1() { return canonical(2, 2, "tensor1"); }

TensorProductOperator tensor2() { return from_twist(tensor1(), cnot(), "tensor2"); }

TensorProductOperator tensor3() {
    return from_basis_images(TensorType(2, 2),
                             {bell(1, 0), bell(1, 1), -bell(0, 1), -bell(0, 0)},
                             "tensor3");
}

ComplexVector bell00(const TensorProductOperator &t) {
    return (t.apply(ket0(), ket0()) + t.apply(ket1(), ket1())) / std::sqrt(2.0);
}

Circuit ct0a() {
    const auto t = tensor1();
    return {"ct0a",
            {{"tensor1", t}},
            t.apply(ket0(), ket0()),
            {{GateKind::unitary, "H", "tensor1", {hadamard(), identity(2)}, {}},
             {GateKind::unitary, "CX", "tensor1", {cnot()}, {}}}};
}

Circuit ct0b() {
    const auto t = tensor2();
    return {"ct0b",
            {{"tensor2", t}},
            t.apply(ket0(), ket0()),
            {{GateKind::unitary, "H", "tensor2", {hadamard(), identity(2)}, {}}}};
}

ComplexMatrix observable_s() { return bell_derived_twist(); }

ComplexMatrix observable_s_prime() { return cnot() * observable_s() * cnot(); }

Circuit teleportation(Complex a, Complex b) {
    return build_teleportation(tensor3(), tensor2(), tensor1(), a, b);
}

std::array<ComplexVector, 3> teleportation_states(Complex a, Complex b) {
    const double r = std::sqrt(0.5);
    ComplexVector phi1 =
        a * r * (b3(0, 0, 0) + b3(0, 1, 1)) + b * r * (b3(1, 0, 0) + b3(1, 1, 1));
    ComplexVector phi2 =
        a * r * (b3(0, 0, 0) + b3(0, 1, 1)) + b * r * (b3(1, 1, 0) + b3(1, 0, 1));
    ComplexVector phi3 =
        a * 0.5 * (b3(0, 0, 0) + b3(1, 0, 0) + b3(0, 1, 1) + b3(1, 1, 1)) +
        b * 0.5 * (b3(0, 1, 0) - b3(1, 1, 0) + b3(0, 0, 1) - b3(1, 0, 1));
    return {phi1, phi2, phi3};
}

std::vector<std::string> demo_names() {
    return {"example1", "coordination", "teleportation", "swapbridge"};
}

namespace {

constexpr double kStrict = 1e-12;

void factor_section(Report &report, const std::string &name, const ComplexVector &state,
                    const TensorProductOperator &t, const ComplexVector &want_left,
                    const ComplexVector &want_right) {
    auto &s = report.section(name);
    s.add("operator", t.label()).add("state", state);
    const auto f = factorize_state(state, t);
    if (!f) {
        s.add("factorizable", std::string("no")).check(false, "state is entangled");
        return;
    }
    const double residual = (t.apply(f->first, f->second) - state).norm();
    s.add("factorizable", std::string("yes"))
        .add("left", f->first)
        .add("right", f->second)
        .add("residual", residual);
    s.check(residual < kStrict, "residual too large");
    s.check(approx_eq_phase(f->first, want_left, Tolerance(kStrict)), "left factor");
    s.check(approx_eq_phase(f->second, want_right, Tolerance(kStrict)), "right factor");
}

Report example1(Tolerance tol) {
    Report report;
    const auto t1 = tensor1();
    const auto t2 = tensor2();
    {
        auto &s = report.section("example1.relating_unitary");
        const ComplexMatrix w = relating_unitary(t1, t2);
        s.add("W", w);
        s.check(max_abs_diff(w, cnot()) <= tol.eps, "W differs from CX");
    }
    factor_section(report, "example1.bell00_tensor1_under_tensor2", bell00(t1), t2,
                   ket_plus(), ket0());
    factor_section(report, "example1.bell00_tensor2_under_tensor1", bell00(t2), t1,
                   ket_plus(), ket0());
    {
        auto &s = report.section("example1.schmidt");
        const auto under1 = schmidt(bell00(t1), t1);
        const auto under2 = schmidt(bell00(t1), t2);
        s.add("rank_under_tensor1", static_cast<long long>(under1.rank))
            .add("coefficients_under_tensor1", under1.coefficients)
            .add("rank_under_tensor2", static_cast<long long>(under2.rank));
        s.check(under1.rank == 2 && under2.rank == 1, "unexpected Schmidt ranks");
    }
    return report;
}

Report coordination(std::uint64_t seed, Tolerance tol) {
    Report report;
    const auto t1 = tensor1();
    const auto t2 = tensor2();
    const auto t3 = tensor3();
    const ComplexVector state = bell00(t1);

    {
        auto &s = report.section("coordination.circuits");
        const auto a = simulate(ct0a(), seed, tol);
        const auto b = simulate(ct0b(), seed, tol);
        s.add("ct0a_final", a.checkpoints.back().state)
            .add("ct0b_final", b.checkpoints.back().state);
        s.check(approx_eq_phase(a.checkpoints.back().state, state, tol), "ct0a final");
        s.check(approx_eq_phase(b.checkpoints.back().state, state, tol), "ct0b final");
    }

    const auto report_measurement = [&](const std::string &name,
                                        const TensorProductOperator &t) -> ReportSection & {
        auto &s = report.section(name);
        const ComplexMatrix obs = t.lift(identity(2), pauli_z());
        s.add("observable", obs);
        const auto results = measure(state, observable_from(obs, tol), tol);
        for (const auto &r : results) {
            const std::string key = r.outcome > 0 ? "+1" : "-1";
            s.add("probability[" + key + "]", r.probability);
            s.add("post_state[" + key + "]",
                  r.post_state ? ReportValue(*r.post_state) : ReportValue(std::string("absent")));
        }
        return s;
    };
    {
        auto &s = report_measurement("coordination.measure_tensor1_IZ", t1);
        const auto results = measure(state, observable_from(t1.lift(identity(2), pauli_z())));
        s.check(results.size() == 2, "expected two outcomes");
        for (const auto &r : results) {
            s.check(std::abs(r.probability - 0.5) < kStrict, "probability not 1/2");
        }
    }
    {
        auto &s = report_measurement("coordination.measure_tensor2_IZ", t2);
        const auto results = measure(state, observable_from(t2.lift(identity(2), pauli_z())));
        s.check(results.size() == 2, "expected two outcomes");
        for (const auto &r : results) {
            if (r.outcome > 0) {
                s.check(std::abs(r.probability - 1.0) < kStrict, "+1 not certain");
            } else {
                s.check(!r.post_state.has_value(), "-1 branch has a post state");
            }
        }
    }
    {
        auto &s = report.section("coordination.observable_S");
        const auto pairs = eig_hermitian(observable_s(), tol);
        RealVector values(static_cast<Eigen::Index>(pairs.size()));
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            values(static_cast<Eigen::Index>(i)) = pairs[i].value;
        }
        s.add("S", observable_s()).add("eigenvalues", values);
        RealVector want(4);
        want << 1, 1, -1, -1;
        s.check(values.size() == 4 && (values - want).cwiseAbs().maxCoeff() < tol.eps,
                "eigenvalues differ from (1, 1, -1, -1)");
    }
    {
        auto &s = report.section("coordination.observable_S_prime");
        const ComplexMatrix sp = observable_s_prime();
        s.add("S_prime", sp);
        bool any = false;
        for (const auto &t : {t1, t2, t3}) {
            const auto f = factorize_operator(sp, t);
            if (!f) {
                s.add(t.label(), std::string("not local"));
                continue;
            }
            any = true;
            s.add(t.label(), std::string("local"))
                .add(t.label() + ".left", f->left)
                .add(t.label() + ".right", f->right)
                .add(t.label() + ".residual", f->residual);
        }
        s.check(any, "S' is not local under any candidate");
    }
    return report;
}

Report teleport(std::uint64_t seed, Tolerance tol) {
    Report report;
    const Complex a(0.6, 0.0);
    const Complex b(0.0, 0.8);
    const Circuit c = teleportation(a, b);
    const auto trace = simulate(c, seed, tol);
    const auto expected = teleportation_states(a, b);
    {
        auto &s = report.section("teleportation.states");
        s.add("a", a).add("b", b);
        for (std::size_t k = 0; k < 3; ++k) {
            const auto &state = trace.checkpoints.at(k).state;
            const std::string key = "phi" + std::to_string(k + 1);
            s.add(key, state);
            s.check(max_abs_diff(state, expected[k]) < tol.eps, key + " mismatch");
        }
    }
    {
        auto &s = report.section("teleportation.sample");
        s.add("seed", static_cast<long long>(seed));
        for (const auto &r : trace.measurement_records) {
            s.add(r.gate, r.result.outcome);
        }
        const long long i = trace.measurement_records.at(0).result.outcome < 0 ? 1 : 0;
        const long long j = trace.measurement_records.at(1).result.outcome < 0 ? 1 : 0;
        s.add("i", i).add("j", j);
        const auto split =
            factorize_state(trace.checkpoints.back().state, c.frame("B(A1A2)").op);
        s.check(split.has_value(), "B is entangled with A1, A2");
        if (split) {
            const ComplexVector input = a * ket0() + b * ket1();
            s.add("bob", split->second);
            s.check(approx_eq_phase(split->second, input, tol), "Bob's state differs");
        }
    }
    {
        auto &s = report.section("teleportation.branches");
        const auto branches = enumerate_branches(c, tol);
        s.add("count", static_cast<long long>(branches.size()));
        s.check(branches.size() == 4, "expected four branches");
        for (const auto &br : branches) {
            const std::string key = "probability[" +
                                    std::string(br.outcomes.at(0) > 0 ? "+" : "-") +
                                    std::string(br.outcomes.at(1) > 0 ? "+" : "-") + "]";
            s.add(key, br.probability);
            s.check(std::abs(br.probability - 0.25) < tol.eps, key);
        }
    }
    return report;
}

Report swapbridge(std::uint64_t seed, Tolerance tol) {
    Report report;
    const auto t1 = tensor1();
    const auto t2 = tensor2();
    const auto bridged = swap_bridge(ct0a(), t2, t1);
    const auto trace = simulate(bridged.circuit, seed, tol);
    const ComplexVector &final_state = trace.checkpoints.back().state;

    auto &s = report.section("swapbridge");
    s.add("partner", t2.label()).add("bridge", t1.label()).add("final", final_state);
    const auto cut = schmidt(final_state, bridged.context.pairing(kPairsFrame).op());
    s.add("schmidt_rank", static_cast<long long>(cut.rank));
    s.check(cut.rank == 1, "originals entangled with shadows");
    const auto split = bridge_split(bridged, final_state);
    if (!split) {
        s.check(false, "no split across the bridge cut");
        return report;
    }
    const auto originals = factorize_state(split->first, t1);
    const auto shadows = factorize_state(split->second, bridged.partner_op);
    s.check(originals.has_value() && shadows.has_value(), "pairs not separable");
    if (originals && shadows) {
        s.add("Q1", originals->first)
            .add("Q2", originals->second)
            .add("Q1'", shadows->first)
            .add("Q2'", shadows->second);
        s.check(approx_eq_phase(originals->first, ket0(), tol), "Q1 not |0>");
        s.check(approx_eq_phase(originals->second, ket0(), tol), "Q2 not |0>");
        s.check(approx_eq_phase(shadows->first, ket_plus(), tol), "Q1' not |+>");
        s.check(approx_eq_phase(shadows->second, ket0(), tol), "Q2' not |0>");
    }
    return report;
}

} // namespace

Report run_demo(const std::string &name, std::uint64_t seed, Tolerance tol) {
    if (name == "example1") {
        return example1(tol);
    }
    if (name == "coordination") {
        return coordination(seed, tol);
    }
    if (name == "teleportation") {
        return teleport(seed, tol);
    }
    if (name == "swapbridge") {
        return swapbridge(seed, tol);
    }
    raise(ErrorCode::InvalidArgument, "unknown demo '" + name + "'");
}

} // namespace tensorctx::builtin
