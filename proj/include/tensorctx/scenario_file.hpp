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
#include <string_view>
#include <variant>
#include <vector>

#include "tensorctx/circuit.hpp"
#include "tensorctx/composition.hpp"
#include "tensorctx/numerics.hpp"
#include "tensorctx/report.hpp"
#include "tensorctx/tensor_op.hpp"

namespace tensorctx {

// Structured form of a scenario file. See docs/scenario-format.md for the
// grammar. Everything here is plain data; build_workspace turns it into
// library objects.

inline constexpr long long kScenarioVersion = 1;

struct OperatorDef {
    std::string label;
    Eigen::Index d1 = 0;
    Eigen::Index d2 = 0;
    ComplexMatrix twist;
};

struct StateDef {
    std::string label;
    ComplexVector entries;
};

struct MatrixDef {
    std::string label;
    ComplexMatrix entries;
};

struct PairwiseDef {
    std::string first;
    std::string second;
    std::string op;

    friend bool operator==(const PairwiseDef &, const PairwiseDef &) = default;
};

struct PairingDef {
    std::string label;
    std::vector<std::string> first;
    std::vector<std::string> second;
    std::optional<std::vector<Eigen::Index>> assignment;

    friend bool operator==(const PairingDef &, const PairingDef &) = default;
};

struct ContextDef {
    std::string label;
    std::vector<Part> parts;
    std::vector<PairwiseDef> pairwise;
    std::vector<PairingDef> pairings;

    friend bool operator==(const ContextDef &, const ContextDef &) = default;
};

/// A frame names either an operator, or a pairing of a context.
struct FrameDef {
    std::string name;
    std::string op;
    std::string context;
    std::string pairing;

    friend bool operator==(const FrameDef &, const FrameDef &) = default;
};

struct GateDef {
    GateKind kind = GateKind::unitary;
    std::string label;
    std::string frame;
    std::vector<std::string> factors; ///< matrix labels
    std::optional<Condition> condition;

    friend bool operator==(const GateDef &, const GateDef &) = default;
};

struct CircuitDef {
    std::string label;
    std::vector<FrameDef> frames;
    std::string initial; ///< state label
    std::vector<GateDef> gates;

    friend bool operator==(const CircuitDef &, const CircuitDef &) = default;
};

enum class DirectiveKind { verify, schmidt, factorize, run, transform };

std::string_view to_string(DirectiveKind kind) noexcept;

/// Vector or matrix payload of an expectation.
using Tensor = std::variant<ComplexVector, ComplexMatrix>;

struct Expectation {
    std::optional<std::string> status;       ///< verify: "pass" or "fail"
    std::optional<long long> rank;           ///< schmidt
    std::optional<std::vector<double>> coefficients;
    std::optional<std::string> factorizable; ///< factorize: "yes" or "no"
    std::optional<Tensor> left;
    std::optional<Tensor> right;
    std::optional<std::vector<ComplexVector>> checkpoints; ///< run, leading ones
    std::optional<ComplexVector> final_state;
    std::optional<std::vector<double>> outcomes;
    std::optional<ComplexVector> initial; ///< transform
};

struct Directive {
    DirectiveKind kind = DirectiveKind::verify;
    std::string label; ///< optional; names results for later directives
    std::string state;
    std::string op;
    std::string target;
    std::string circuit;
    std::map<std::string, std::string> frames; ///< transform: frame -> operator
    std::optional<std::uint64_t> seed;
    std::optional<long long> trials;
    std::optional<Expectation> expect;
};

struct ScenarioFile {
    long long version = kScenarioVersion;
    std::string notes;
    std::vector<OperatorDef> operators;
    std::vector<StateDef> states;
    std::vector<MatrixDef> matrices;
    std::vector<ContextDef> contexts;
    std::vector<CircuitDef> circuits;
    std::vector<Directive> directives;
};

bool operator==(const OperatorDef &a, const OperatorDef &b);
bool operator==(const StateDef &a, const StateDef &b);
bool operator==(const MatrixDef &a, const MatrixDef &b);
bool operator==(const Expectation &a, const Expectation &b);
bool operator==(const Directive &a, const Directive &b);
bool operator==(const ScenarioFile &a, const ScenarioFile &b);

/// Throws ParseError (with line and column where known) for malformed text,
/// wrong shapes or duplicate labels, and ResolutionError for references to
/// unknown labels.
ScenarioFile parse_scenario(std::string_view text);

/// Canonical JSON text; parse_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const ScenarioFile &s);

/// Library objects named by label. Directive results are added as they run.
struct Workspace {
    std::map<std::string, TensorProductOperator> operators;
    std::map<std::string, ComplexVector> states;
    std::map<std::string, ComplexMatrix> matrices;
    std::map<std::string, MultipartiteContext> contexts;
    std::map<std::string, Circuit> circuits;
};

/// Constructs every definition. Library errors (NotUnitary, ...) propagate
/// with the definition's label in the message.
Workspace build_workspace(const ScenarioFile &s);

struct RunOptions {
    std::uint64_t seed = 0; ///< used when a directive has no seed of its own
    Tolerance tolerance;
};

/// Runs directives in file order. Each becomes one report section.
Report run_directives(const ScenarioFile &s, Workspace &ws, const RunOptions &options);

/// A self-contained scenario file holding `c` under the label `label`.
ScenarioFile circuit_to_scenario(const Circuit &c, const std::string &label);

} // namespace tensorctx
