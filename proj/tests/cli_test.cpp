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

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "tensorctx/cli.hpp"
#include "tensorctx/scenario_file.hpp"

namespace {

using namespace tensorctx;

struct Outcome {
    int status = -1;
    std::string out;
    std::string err;
};

Outcome run(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    Outcome o;
    o.status = run_cli(args, out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

std::string scenario(const std::string &name) {
    return std::string(TENSORCTX_SCENARIO_DIR) + "/" + name;
}

std::string write_temp(const std::string &name, const std::string &text) {
    const std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << text;
    return path;
}

class EnvSeed {
  public:
    explicit EnvSeed(const char *value) { ::setenv("TENSORCTX_SEED", value, 1); }
    ~EnvSeed() { ::unsetenv("TENSORCTX_SEED"); }
    EnvSeed(const EnvSeed &) = delete;
    EnvSeed &operator=(const EnvSeed &) = delete;
};

class BuiltinDemo : public ::testing::TestWithParam<const char *> {};

TEST_P(BuiltinDemo, ExitsZero) {
    const auto o = run({"--seed", "7", "paper-demo", GetParam()});
    EXPECT_EQ(o.status, kExitOk) << o.out << o.err;
    EXPECT_EQ(o.out.find("result: FAIL"), std::string::npos) << o.out;
}

INSTANTIATE_TEST_SUITE_P(Demos, BuiltinDemo,
                         ::testing::Values("example1", "coordination", "teleportation",
                                           "swapbridge"));

TEST(Cli, Example1PrintsTheFactorization) {
    const auto o = run({"--format", "machine", "paper-demo", "example1"});
    ASSERT_EQ(o.status, kExitOk) << o.err;
    EXPECT_NE(o.out.find("example1.bell00_tensor1_under_tensor2.factorizable=yes"),
              std::string::npos)
        << o.out;
    EXPECT_NE(o.out.find("example1.bell00_tensor1_under_tensor2.left[0]=0.70710678118654"),
              std::string::npos)
        << o.out;
    EXPECT_NE(o.out.find("exit_status=0"), std::string::npos);
}

TEST(Cli, TeleportationDemoPrintsStatesAndSample) {
    const auto o = run({"paper-demo", "teleportation", "--seed", "7"});
    ASSERT_EQ(o.status, kExitOk) << o.err;
    for (const char *key : {"phi1", "phi2", "phi3", "== teleportation.sample ==", "bob"}) {
        EXPECT_NE(o.out.find(key), std::string::npos) << key << "\n" << o.out;
    }
}

TEST(Cli, MachineOutputIsStableForAFixedSeed) {
    const auto a = run({"--format", "machine", "--seed", "3", "paper-demo", "teleportation"});
    const auto b = run({"--format", "machine", "--seed", "3", "paper-demo", "teleportation"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.status, kExitOk);
}

TEST(Cli, EnvironmentSeedIsTheDefault) {
    const auto flagged = run({"--format", "machine", "--seed", "5", "paper-demo", "teleportation"});
    std::string from_env;
    {
        EnvSeed env("5");
        from_env = run({"--format", "machine", "paper-demo", "teleportation"}).out;
        const auto overridden =
            run({"--format", "machine", "--seed", "6", "paper-demo", "teleportation"});
        EXPECT_NE(overridden.out.find("teleportation.sample.seed=6"), std::string::npos);
    }
    EXPECT_EQ(flagged.out, from_env);
    EnvSeed bad("seven");
    EXPECT_EQ(run({"paper-demo", "teleportation"}).status, kExitUsage);
}

TEST(Cli, RunShippedScenarios) {
    for (const char *name : {"example1.json", "coordination.json", "teleportation.json"}) {
        const auto o = run({"run", scenario(name)});
        EXPECT_EQ(o.status, kExitOk) << name << "\n" << o.out << o.err;
    }
}

TEST(Cli, VerifyReportsAxiomsAndRelations) {
    const auto o = run({"--format", "machine", "verify", scenario("coordination.json")});
    EXPECT_EQ(o.status, kExitOk) << o.err;
    EXPECT_NE(o.out.find("axioms[tensor3].status=pass"), std::string::npos) << o.out;
    EXPECT_NE(o.out.find("relation[tensor1,tensor2].status=pass"), std::string::npos) << o.out;
}

TEST(Cli, SchmidtAndFactorizeCommands) {
    const auto s = run({"--format", "machine", "schmidt", scenario("example1.json"), "bell00_t1",
                        "tensor2"});
    EXPECT_EQ(s.status, kExitOk) << s.err;
    EXPECT_NE(s.out.find("schmidt.rank=1"), std::string::npos) << s.out;

    const auto f = run({"factorize", scenario("coordination.json"), "S_prime", "tensor1"});
    EXPECT_EQ(f.status, kExitOk) << f.err;
    EXPECT_NE(f.out.find("yes"), std::string::npos) << f.out;

    EXPECT_EQ(run({"schmidt", scenario("example1.json"), "nope", "tensor2"}).status,
              kExitInputError);
}

TEST(Cli, TransformEmitsAParsableScenario) {
    const auto o = run({"transform", scenario("coordination.json"), "ct0a", "tensor2", "--label",
                        "ct0a_moved"});
    ASSERT_EQ(o.status, kExitOk) << o.err;
    const auto s = parse_scenario(o.out);
    ASSERT_EQ(s.circuits.size(), 1u);
    EXPECT_EQ(s.circuits[0].label, "ct0a_moved");
    const auto path = write_temp("moved.json", o.out);
    EXPECT_EQ(run({"run", path}).status, kExitOk);
}

TEST(Cli, ExpectationFailureExitsOne) {
    const std::string text = R"({
  "version": 1,
  "operators": [{"label": "canon", "d1": 2, "d2": 2,
     "twist": [[[1,0],[0,0],[0,0],[0,0]], [[0,0],[1,0],[0,0],[0,0]],
               [[0,0],[0,0],[1,0],[0,0]], [[0,0],[0,0],[0,0],[1,0]]]}],
  "states": [{"label": "bell",
              "entries": [[0.70710678118654757,0],[0,0],[0,0],[0.70710678118654757,0]]}],
  "directives": [{"command": "schmidt", "state": "bell", "operator": "canon",
                  "expect": {"rank": 1}}]
})";
    const auto o = run({"run", write_temp("wrong.json", text)});
    EXPECT_EQ(o.status, kExitExpectationFailed);
    EXPECT_NE(o.err.find("failed"), std::string::npos);
}

TEST(Cli, InputErrorsExitTwo) {
    const auto bad_shape = run({"verify", scenario("bad-twist.json")});
    EXPECT_EQ(bad_shape.status, kExitInputError);
    EXPECT_NE(bad_shape.err.find("broken"), std::string::npos) << bad_shape.err;

    const auto non_unitary = run({"verify", scenario("non-unitary.json")});
    EXPECT_EQ(non_unitary.status, kExitInputError);
    EXPECT_NE(non_unitary.err.find("NotUnitary"), std::string::npos) << non_unitary.err;

    EXPECT_EQ(run({"run", scenario("does-not-exist.json")}).status, kExitInputError);
}

TEST(Cli, UsageErrorsExit64) {
    EXPECT_EQ(run({}).status, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).status, kExitUsage);
    EXPECT_EQ(run({"paper-demo", "nosuchdemo"}).status, kExitUsage);
    EXPECT_EQ(run({"--tolerance", "-1", "paper-demo", "example1"}).status, kExitUsage);
    EXPECT_EQ(run({"--format", "xml", "paper-demo", "example1"}).status, kExitUsage);
    EXPECT_EQ(run({"--seed", "abc", "paper-demo", "example1"}).status, kExitUsage);
    EXPECT_EQ(run({"--help"}).status, kExitOk);
}

} // namespace
