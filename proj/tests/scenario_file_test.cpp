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

#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "matchers.hpp"
#include "tensorctx/errors.hpp"
#include "tensorctx/scenario_file.hpp"
#include "tensorctx/scenarios.hpp"
#include "tensorctx/standard.hpp"

namespace {

using namespace tensorctx;
using testing_util::code_of;
using testing_util::MatrixNear;

std::string read_scenario(const std::string &name) {
    std::ifstream in(std::string(TENSORCTX_SCENARIO_DIR) + "/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char *kMinimal = R"({
  "version": 1,
  "operators": [
    {"label": "canon", "d1": 2, "d2": 2,
     "twist": [[[1,0],[0,0],[0,0],[0,0]],
               [[0,0],[1,0],[0,0],[0,0]],
               [[0,0],[0,0],[1,0],[0,0]],
               [[0,0],[0,0],[0,0],[1,0]]]}
  ]
})";

ParseError parse_error_of(const std::string &text) {
    try {
        (void)parse_scenario(text);
    } catch (const ParseError &e) {
        return e;
    }
    ADD_FAILURE() << "no ParseError";
    return ParseError("none", 0, 0);
}

TEST(ParseScenario, Minimal) {
    const auto s = parse_scenario(kMinimal);
    EXPECT_EQ(s.version, 1);
    ASSERT_EQ(s.operators.size(), 1u);
    EXPECT_EQ(s.operators[0].label, "canon");
    EXPECT_TRUE(MatrixNear(s.operators[0].twist, standard::identity(4), 0.0));
    EXPECT_TRUE(s.directives.empty());
    const auto ws = build_workspace(s);
    EXPECT_EQ(ws.operators.at("canon").type(), TensorType(2, 2));
}

TEST(ParseScenario, SchmidtDirectiveUnderTensor2) {
    const std::string text = R"({
  "version": 1,
  "operators": [
    {"label": "tensor2", "d1": 2, "d2": 2,
     "twist": [[[1,0],[0,0],[0,0],[0,0]],
               [[0,0],[1,0],[0,0],[0,0]],
               [[0,0],[0,0],[0,0],[1,0]],
               [[0,0],[0,0],[1,0],[0,0]]]}
  ],
  "states": [{"label": "bell00",
              "entries": [[0.70710678118654757,0],[0,0],[0,0],[0.70710678118654757,0]]}],
  "directives": [{"command": "schmidt", "state": "bell00", "operator": "tensor2",
                  "expect": {"rank": 1}}]
})";
    const auto s = parse_scenario(text);
    ASSERT_EQ(s.directives.size(), 1u);
    EXPECT_EQ(s.directives[0].kind, DirectiveKind::schmidt);
    EXPECT_EQ(s.directives[0].expect->rank, 1);
    auto ws = build_workspace(s);
    const auto report = run_directives(s, ws, {});
    ASSERT_EQ(report.sections.size(), 1u);
    EXPECT_EQ(report.sections[0].name, "schmidt.0");
    EXPECT_TRUE(report.ok());
}

TEST(ParseScenario, MalformedTwistNamesTheDefinition) {
    const auto e = parse_error_of(read_scenario("bad-twist.json"));
    EXPECT_NE(std::string(e.what()).find("broken"), std::string::npos) << e.what();
    EXPECT_GT(e.line(), 1u);
    EXPECT_GT(e.column(), 0u);
}

TEST(ParseScenario, SyntaxErrorsCarryPosition) {
    const auto e = parse_error_of("{\n  \"version\": 1,\n  \"operators\": [\n}");
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
}

TEST(ParseScenario, RejectsLiteralsOutsideTheDialect) {
    for (const char *text : {R"({"version": 1, "notes": true})", R"({"version": null})",
                             R"({"version": 1, "operators": [false]})"}) {
        EXPECT_EQ(code_of([&] { (void)parse_scenario(text); }), ErrorCode::ParseError) << text;
    }
}

TEST(ParseScenario, RejectsUnknownKeysAndBadVersions) {
    EXPECT_EQ(code_of([] { (void)parse_scenario(R"({"version": 1, "extra": []})"); }),
              ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { (void)parse_scenario(R"({"version": 2})"); }),
              ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { (void)parse_scenario(R"({"notes": "x"})"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] {
                  (void)parse_scenario(
                      R"({"version": 1, "states": [{"label": "s", "entries": [1, 0]}]})");
              }),
              ErrorCode::ParseError);
}

TEST(ParseScenario, UnknownLabelIsAResolutionError) {
    const std::string text = R"({
  "version": 1,
  "states": [{"label": "s", "entries": [[1,0],[0,0],[0,0],[0,0]]}],
  "directives": [{"command": "schmidt", "state": "s", "operator": "missing"}]
})";
    try {
        (void)parse_scenario(text);
        ADD_FAILURE() << "no ResolutionError";
    } catch (const ResolutionError &e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("missing"), std::string::npos) << msg;
        EXPECT_NE(msg.find("line 4"), std::string::npos) << msg;
    }
}

TEST(ParseScenario, DuplicateLabels) {
    const std::string text = R"({
  "version": 1,
  "states": [{"label": "s", "entries": [[1,0]]}, {"label": "s", "entries": [[1,0]]}]
})";
    EXPECT_THROW((void)parse_scenario(text), Error);
}

TEST(BuildWorkspace, NonUnitaryTwist) {
    const auto s = parse_scenario(read_scenario("non-unitary.json"));
    try {
        (void)build_workspace(s);
        ADD_FAILURE() << "no error";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotUnitary);
        EXPECT_NE(std::string(e.what()).find("skewed"), std::string::npos) << e.what();
    }
}

class ShippedScenario : public ::testing::TestWithParam<const char *> {};

TEST_P(ShippedScenario, RoundTripsAndPasses) {
    const auto text = read_scenario(GetParam());
    ASSERT_FALSE(text.empty());
    const auto s = parse_scenario(text);
    const auto again = parse_scenario(serialize_scenario(s));
    EXPECT_TRUE(s == again);
    EXPECT_EQ(serialize_scenario(again), serialize_scenario(s));

    auto ws = build_workspace(s);
    const auto report = run_directives(s, ws, {});
    for (const auto &section : report.sections) {
        EXPECT_NE(section.passed, std::optional<bool>(false))
            << section.name << ": " << section.detail;
    }
    EXPECT_EQ(report.exit_status(), 0);
}

INSTANTIATE_TEST_SUITE_P(Files, ShippedScenario,
                         ::testing::Values("example1.json", "coordination.json",
                                           "teleportation.json"),
                         [](const auto &info) {
                             std::string name = info.param;
                             return name.substr(0, name.find('.'));
                         });

TEST(RunDirectives, FailedExpectationSetsExitStatus) {
    const std::string text = R"({
  "version": 1,
  "operators": [{"label": "canon", "d1": 2, "d2": 2,
     "twist": [[[1,0],[0,0],[0,0],[0,0]], [[0,0],[1,0],[0,0],[0,0]],
               [[0,0],[0,0],[1,0],[0,0]], [[0,0],[0,0],[0,0],[1,0]]]}],
  "states": [{"label": "bell",
              "entries": [[0.70710678118654757,0],[0,0],[0,0],[0.70710678118654757,0]]}],
  "directives": [
    {"command": "schmidt", "label": "wrong", "state": "bell", "operator": "canon",
     "expect": {"rank": 1}},
    {"command": "factorize", "label": "split", "target": "bell", "operator": "canon"}
  ]
})";
    const auto s = parse_scenario(text);
    auto ws = build_workspace(s);
    const auto report = run_directives(s, ws, {});
    ASSERT_EQ(report.sections.size(), 2u);
    EXPECT_EQ(report.sections[0].passed, std::optional<bool>(false));
    EXPECT_FALSE(report.sections[1].passed.has_value());
    EXPECT_EQ(report.exit_status(), 1);
}

TEST(RunDirectives, LaterDirectivesSeeEarlierResults) {
    const auto s = parse_scenario(read_scenario("example1.json"));
    auto ws = build_workspace(s);
    (void)run_directives(s, ws, {});
    EXPECT_TRUE(ws.states.count("split_t1_under_t2.left"));
    EXPECT_TRUE(ws.states.count("split_t1_under_t2.right"));
}

TEST(CircuitToScenario, RebuildsTheSameCircuit) {
    const auto c = builtin::teleportation(0.6, Complex(0, 0.8));
    const auto s = circuit_to_scenario(c, "tele");
    const auto parsed = parse_scenario(serialize_scenario(s));
    const auto ws = build_workspace(parsed);
    const auto &rebuilt = ws.circuits.at("tele");
    ASSERT_EQ(rebuilt.gates().size(), c.gates().size());
    EXPECT_TRUE(MatrixNear(rebuilt.initial_state(), c.initial_state(), 1e-15));
    for (std::size_t k = 0; k < c.gates().size(); ++k) {
        EXPECT_TRUE(MatrixNear(rebuilt.effective_matrix(rebuilt.gates()[k]),
                               c.effective_matrix(c.gates()[k]), 1e-14));
        EXPECT_EQ(rebuilt.gates()[k].condition, c.gates()[k].condition);
    }
}

} // namespace
