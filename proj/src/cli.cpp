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

#include "tensorctx/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "tensorctx/analysis.hpp"
#include "tensorctx/errors.hpp"
#include "tensorctx/report.hpp"
#include "tensorctx/scenario_file.hpp"
#include "tensorctx/scenarios.hpp"

namespace tensorctx {

namespace {

constexpr std::size_t kSuiteTrials = 100;

struct Options {
    std::optional<std::uint64_t> seed;
    double tolerance = Tolerance{}.eps;
    std::string format = "text";
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        raise(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::uint64_t parse_seed(const std::string &text) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &used, 10);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size() || text.front() == '-') {
        throw CLI::ValidationError("TENSORCTX_SEED", "'" + text + "' is not a seed");
    }
    return v;
}

Report verify_suites(const Workspace &ws, std::uint64_t seed, Tolerance tol) {
    Report report;
    for (const auto &[label, op] : ws.operators) {
        auto &s = report.section("axioms[" + label + "]");
        const auto r = verify_axioms(op, kSuiteTrials, seed, tol);
        s.add("type", to_string(op.type()))
            .add("trials", static_cast<long long>(r.trials))
            .add("bilinearity_residual", r.bilinearity_residual)
            .add("norm_residual", r.norm_residual);
        s.check(r.passed, "axiom residual above tolerance");
    }
    for (auto a = ws.operators.begin(); a != ws.operators.end(); ++a) {
        for (auto b = std::next(a); b != ws.operators.end(); ++b) {
            if (a->second.type() != b->second.type()) {
                continue;
            }
            auto &s = report.section("relation[" + a->first + "," + b->first + "]");
            const auto r = verify_relation(a->second, b->second, kSuiteTrials, seed);
            s.add("W", relating_unitary(a->second, b->second))
                .add("basis_residual", r.basis_residual)
                .add("lift_residual", r.lift_residual)
                .add("involution_residual", r.involution_residual);
            s.check(r.passed, "relation residual above tolerance");
        }
    }
    return report;
}

struct Loaded {
    ScenarioFile file;
    Workspace ws;
};

Loaded load(const std::string &path) {
    auto file = parse_scenario(read_file(path));
    auto ws = build_workspace(file);
    return {std::move(file), std::move(ws)};
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Tensor product operators as first-class values.", "tensorctx"};
    app.require_subcommand(1);

    Options opt;
    std::optional<std::uint64_t> seed_flag;
    app.add_option("--seed", seed_flag, "Seed for sampling (default: $TENSORCTX_SEED or 0)");
    app.add_option("--tolerance", opt.tolerance, "Comparison tolerance")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}));

    std::string scenario;
    std::string name_a;
    std::string name_b;
    std::string frame;
    std::string label;

    auto *verify = app.add_subcommand("verify", "Run axiom and relation suites on every operator");
    verify->add_option("scenario", scenario, "Scenario file")->required();

    auto *schmidt_cmd = app.add_subcommand("schmidt", "Schmidt decomposition of a state");
    schmidt_cmd->add_option("scenario", scenario, "Scenario file")->required();
    schmidt_cmd->add_option("state", name_a, "State label")->required();
    schmidt_cmd->add_option("operator", name_b, "Operator label")->required();

    auto *factorize = app.add_subcommand("factorize", "Split a state or operator into factors");
    factorize->add_option("scenario", scenario, "Scenario file")->required();
    factorize->add_option("target", name_a, "State or matrix label")->required();
    factorize->add_option("operator", name_b, "Operator label")->required();

    auto *run = app.add_subcommand("run", "Run directives and simulate circuits");
    run->add_option("scenario", scenario, "Scenario file")->required();

    auto *transform = app.add_subcommand("transform", "Rewrite a circuit for a new operator");
    transform->add_option("scenario", scenario, "Scenario file")->required();
    transform->add_option("circuit", name_a, "Circuit label")->required();
    transform->add_option("operator", name_b, "Replacement operator label")->required();
    transform->add_option("--frame", frame, "Frame to replace (default: the first)");
    transform->add_option("--label", label, "Label of the rewritten circuit");

    auto *demo = app.add_subcommand("paper-demo", "Run a built-in demonstration");
    demo->add_option("name", name_a, "Demo name")
        ->required()
        ->check(CLI::IsMember(builtin::demo_names()));

    for (auto *sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (seed_flag) {
            opt.seed = seed_flag;
        } else if (const char *env = std::getenv("TENSORCTX_SEED"); env && *env) {
            opt.seed = parse_seed(env);
        }
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const std::uint64_t seed = opt.seed.value_or(0);
    const Tolerance tol(opt.tolerance);
    const OutputFormat format = *parse_output_format(opt.format);

    try {
        Report report;
        if (verify->parsed()) {
            report = verify_suites(load(scenario).ws, seed, tol);
        } else if (schmidt_cmd->parsed()) {
            auto loaded = load(scenario);
            Directive d;
            d.kind = DirectiveKind::schmidt;
            d.label = "schmidt";
            d.state = name_a;
            d.op = name_b;
            ScenarioFile one;
            one.directives.push_back(d);
            if (!loaded.ws.states.count(name_a)) {
                throw ResolutionError("unknown state '" + name_a + "'");
            }
            if (!loaded.ws.operators.count(name_b)) {
                throw ResolutionError("unknown operator '" + name_b + "'");
            }
            report = run_directives(one, loaded.ws, {seed, tol});
        } else if (factorize->parsed()) {
            auto loaded = load(scenario);
            Directive d;
            d.kind = DirectiveKind::factorize;
            d.label = "factorize";
            d.target = name_a;
            d.op = name_b;
            if (!loaded.ws.states.count(name_a) && !loaded.ws.matrices.count(name_a)) {
                throw ResolutionError("unknown state or matrix '" + name_a + "'");
            }
            if (!loaded.ws.operators.count(name_b)) {
                throw ResolutionError("unknown operator '" + name_b + "'");
            }
            ScenarioFile one;
            one.directives.push_back(d);
            report = run_directives(one, loaded.ws, {seed, tol});
        } else if (run->parsed()) {
            auto loaded = load(scenario);
            report = run_directives(loaded.file, loaded.ws, {seed, tol});
            std::set<std::string> simulated;
            for (const auto &d : loaded.file.directives) {
                if (d.kind == DirectiveKind::run) {
                    simulated.insert(d.circuit);
                }
            }
            for (const auto &c : loaded.file.circuits) {
                if (simulated.count(c.label)) {
                    continue;
                }
                Directive d;
                d.kind = DirectiveKind::run;
                d.label = "trace[" + c.label + "]";
                d.circuit = c.label;
                ScenarioFile one;
                one.directives.push_back(d);
                auto extra = run_directives(one, loaded.ws, {seed, tol});
                for (auto &s : extra.sections) {
                    report.sections.push_back(std::move(s));
                }
            }
        } else if (transform->parsed()) {
            auto loaded = load(scenario);
            const auto c = loaded.ws.circuits.find(name_a);
            if (c == loaded.ws.circuits.end()) {
                throw ResolutionError("unknown circuit '" + name_a + "'");
            }
            const auto op = loaded.ws.operators.find(name_b);
            if (op == loaded.ws.operators.end()) {
                throw ResolutionError("unknown operator '" + name_b + "'");
            }
            const std::string which = frame.empty() ? c->second.frames().front().name : frame;
            (void)c->second.frame(which);
            const Circuit moved = transform_circuit(c->second, {{which, op->second}});
            const std::string new_label = label.empty() ? name_a + "'" : label;
            out << serialize_scenario(circuit_to_scenario(moved, new_label));
            return kExitOk;
        } else if (demo->parsed()) {
            report = builtin::run_demo(name_a, seed, tol);
        }
        write_report(out, report, format);
        if (!report.ok()) {
            err << "tensorctx: one or more expectations failed\n";
        }
        return report.exit_status();
    } catch (const CLI::ValidationError &e) {
        err << "tensorctx: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error &e) {
        err << "tensorctx: " << e.what() << '\n';
        return kExitInputError;
    }
}

} // namespace tensorctx
