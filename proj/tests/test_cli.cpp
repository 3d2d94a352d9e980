#include "cl30/json_io.hpp"
#include "cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

using cl30::json;

namespace {

void expect_near(const json& got, std::vector<double> expected) {
    ASSERT_EQ(got.size(), expected.size()) << got;
    for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_NEAR(got[k].get<double>(), expected[k], 1e-12) << got;
}

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, std::optional<std::string> tol = std::nullopt) {
    std::ostringstream out, err;
    const int code = cl30::cli::run(args, out, err, tol);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, TableAsJsonHasEightRows) {
    const Result r = run({"--format", "json", "table"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    ASSERT_EQ(j.size(), 8u);
    EXPECT_EQ(j[4][4], "F3");
    EXPECT_EQ(j[4][1], "F1m2");
}

TEST(Cli, FormatFlagMayFollowTheSubcommand) {
    const Result r = run({"table", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(json::accept(r.out));
}

TEST(Cli, TableText) {
    const Result r = run({"table"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("F1p2  | F1p2  Rcw   Rccw  F1m2  F2    F1    Id    F3"), std::string::npos) << r.out;
}

TEST(Cli, ComposeHalfTurns) {
    const Result r = run({"compose", "--theta1", "e1:pi", "--theta2", "e2:pi", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    expect_near(j["axis"], {0, 0, 1});
    EXPECT_NEAR(j["angle"].get<double>(), 3.141592653589793, 1e-12);
}

TEST(Cli, RotateAndApply) {
    Result r = run({"rotate", "--theta", "e3:pi/2", "--vector", "[1,0,0]", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    expect_near(json::parse(r.out), {0, 1, 0});

    r = run({"apply", "--element", "Rcw", "--vector", "1,2,3", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    expect_near(json::parse(r.out), {2, -1, 3});

    r = run({"apply", "--matrix", "[[1,2],[3,4]]", "--vector", "1,1,0", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    expect_near(json::parse(r.out), {4, 6, 0});
}

TEST(Cli, DecomposeIdentity) {
    const Result r = run({"decompose", "--matrix", "[[1,0],[0,1]]", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["fermion"]["e11"], json::parse("[1.0,0.0]"));
    EXPECT_EQ(j["fermion"]["e22"], json::parse("[1.0,0.0]"));
    EXPECT_EQ(j["fermion"]["e12"], json::parse("[0.0,0.0]"));
    EXPECT_EQ(j["cliffor"], json::parse("[1.0,0.0,0.0,0.0,0.0,0.0,0.0,0.0]"));
}

TEST(Cli, DecomposeBraConvertsToKet) {
    const Result r = run({"decompose", "--bra", "Rccw", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["ket"], "Rcw");
    EXPECT_EQ(j["fermion"]["e12"], json::parse("[1.0,0.0]"));
    EXPECT_EQ(j["fermion"]["e21"], json::parse("[-1.0,0.0]"));
}

TEST(Cli, Pauli) {
    const Result r = run({"pauli", "--campbell", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    ASSERT_EQ(j["pauli"].size(), 4u);
    EXPECT_EQ(j["pauli"][2]["matrix"], json::parse("[[[0.0,0.0],[0.0,-1.0]],[[0.0,1.0],[0.0,0.0]]]"));
    EXPECT_EQ(j["campbell"].size(), 4u);
}

TEST(Cli, Chain) {
    Result r = run({"chain", "--vector", "1,0,0", "--steps", "ket:Rccw", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    expect_near(json::parse(r.out), {0, 0, 1, 0, 0, 0, 0, 0});

    r = run({"chain", "--vector", "[1,0,0]", "--steps", R"([{"scale":"e2"},{"ket":"F1"}])", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    expect_near(json::parse(r.out), {0, 0, 0, 0, 0, 0, -1, 0});
}

TEST(Cli, VerifyPasses) {
    const Result r = run({"verify", "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.out;
    const json j = json::parse(r.out);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_GT(j["checks"].size(), 20u);
}

TEST(Cli, DistinctExitCodes) {
    EXPECT_EQ(run({"apply", "--element", "R90", "--vector", "1,0,0"}).code, cl30::cli::kUnknownLabel);
    EXPECT_EQ(run({"decompose", "--matrix", "[[1,2],[3"}).code, cl30::cli::kMalformedInput);
    EXPECT_EQ(run({"apply", "--matrix", "[[1,0],[0,1]]", "--vector", "1,0,1"}).code, cl30::cli::kNonPlanarVector);
    EXPECT_EQ(run({"chain", "--vector", "1,0,0", "--steps", "ket:F1;bra:F2"}).code, cl30::cli::kMixedBraKetChain);
    EXPECT_EQ(run({"rotate", "--theta", "e3:pi"}).code, cl30::cli::kUsage);
    EXPECT_EQ(run({}).code, cl30::cli::kUsage);
    const Result r = run({"apply", "--element", "R90", "--vector", "1,0,0"});
    EXPECT_EQ(r.err.rfind("error: ", 0), 0u);
}

TEST(Cli, ToleranceOverride) {
    EXPECT_EQ(run({"table"}, "1e-6").code, 0);
    EXPECT_EQ(run({"table"}, "-1").code, cl30::cli::kMalformedInput);
    EXPECT_EQ(run({"table"}, "abc").code, cl30::cli::kMalformedInput);
}
