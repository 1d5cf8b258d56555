// Copyright 2026 The fastdvm Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "fastdvm/cli.hpp"

namespace fastdvm::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("fastdvm_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& content) {
        const auto path = dir_ / name;
        std::ofstream(path) << content;
        return path.string();
    }

    std::filesystem::path dir_;
};

TEST(ParseAngleTest, Syntaxes) {
    constexpr double pi = std::numbers::pi;
    EXPECT_DOUBLE_EQ(parse_angle("0.25"), 0.25);
    EXPECT_DOUBLE_EQ(parse_angle("pi/32"), pi / 32);
    EXPECT_DOUBLE_EQ(parse_angle("-pi/32"), -pi / 32);
    EXPECT_DOUBLE_EQ(parse_angle("pi"), pi);
    EXPECT_DOUBLE_EQ(parse_angle("2*pi/5"), 2 * pi / 5);
    EXPECT_DOUBLE_EQ(parse_angle("3pi/4"), 3 * pi / 4);
    for (const char* bad : {"", "pi/0", "pi/x", "abc", "1.5x", "pi*2"}) {
        EXPECT_THROW(parse_angle(bad), std::exception) << bad;
    }
}

TEST_F(CliTest, MultiplyAllOnes) {
    const auto r = run_cli({"multiply", "--size", "2", "--theta", "0", "--scaled", "--input", write("z.csv", "1,0\n1,0\n")});
    EXPECT_EQ(r.code, kSuccess);
    EXPECT_EQ(r.out, "2,0\n2,0\n");
}

TEST_F(CliTest, MultiplyRandomIsDeterministic) {
    const std::vector<std::string> args{"multiply", "--size", "8", "--theta", "pi/32", "--random", "--seed", "7"};
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    EXPECT_EQ(a.code, kSuccess);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 8);
}

TEST_F(CliTest, MultiplyDegenerate) {
    const auto r = run_cli({"multiply", "--size", "128", "--theta", "pi/32"});
    EXPECT_EQ(r.code, kDegenerate);
    EXPECT_NE(r.err.find("degenerate"), std::string::npos);
    const auto raw = run_cli({"multiply", "--size", "128", "--theta", "pi/32", "--random", "--raw"});
    EXPECT_EQ(raw.code, kSuccess);
    EXPECT_NE(raw.err.find("warning"), std::string::npos);
    EXPECT_EQ(std::count(raw.out.begin(), raw.out.end(), '\n'), 128);
}

TEST_F(CliTest, MultiplyJsonAndSingle) {
    const auto r = run_cli({"multiply", "--size", "4", "--theta", "pi/32", "--random", "--format", "json",
                            "--precision", "single"});
    ASSERT_EQ(r.code, kSuccess);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["meta"]["n"], 4);
    EXPECT_EQ(doc["meta"]["theta"], "pi/32");
    EXPECT_EQ(doc["meta"]["algorithm"], "dvm");
    EXPECT_EQ(doc["meta"]["degenerate"], false);
    EXPECT_EQ(doc["rows"].size(), 4u);
}

TEST_F(CliTest, MultiplyGeneralNode) {
    const auto r = run_cli({"multiply", "--size", "2", "--alpha-re", "0", "--alpha-im", "2", "--scaled", "--input",
                            write("z.csv", "0,0\n1,0\n")});
    EXPECT_EQ(r.code, kSuccess);
    EXPECT_EQ(r.out, "1,0\n0,2\n");
    EXPECT_EQ(run_cli({"multiply", "--size", "2", "--alpha-re", "0", "--alpha-im", "0", "--random"}).code, kUsage);
}

TEST_F(CliTest, MultiplyValidation) {
    EXPECT_EQ(run_cli({"multiply", "--size", "6", "--random"}).code, kUsage);
    EXPECT_EQ(run_cli({"multiply", "--size", "4", "--theta", "pi/32"}).code, kUsage);
    EXPECT_EQ(run_cli({"multiply", "--size", "4", "--theta", "pi/32", "--input", write("z.csv", "1,0\n")}).code, kUsage);
    const auto bad = run_cli({"multiply", "--size", "2", "--input", write("bad.csv", "1,0\n1;0\n")});
    EXPECT_EQ(bad.code, kUsage);
    EXPECT_NE(bad.err.find("line 2"), std::string::npos);
    EXPECT_EQ(run_cli({"multiply", "--size", "2", "--input", (dir_ / "missing.csv").string()}).code, kIo);
    EXPECT_EQ(run_cli({"multiply", "--size", "2", "--random", "--output", (dir_ / "no/such/dir.csv").string()}).code,
              kIo);
    EXPECT_EQ(run_cli({"multiply", "--size", "4", "--random", "--theta", "pi/zero"}).code, kUsage);
    EXPECT_EQ(run_cli({"nonsense"}).code, kUsage);
    EXPECT_EQ(run_cli({}).code, kUsage);
}

TEST_F(CliTest, OutputFile) {
    const std::string path = (dir_ / "y.csv").string();
    ASSERT_EQ(run_cli({"multiply", "--size", "4", "--random", "--theta", "0.3", "--output", path}).code, kSuccess);
    std::ifstream in(path);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        ++lines;
    }
    EXPECT_EQ(lines, 4);
}

TEST_F(CliTest, ComplexityTables) {
    const auto r = run_cli({"complexity", "--variant", "scaled", "--max-size", "4096"});
    ASSERT_EQ(r.code, kSuccess);
    EXPECT_NE(r.out.find("\n8,56,40,56,52\n"), std::string::npos);
    EXPECT_NE(r.out.find("\n4096,16773120,8411136,16773120,8454144\n"), std::string::npos);
    const auto d = run_cli({"complexity", "--variant", "dvm", "--max-size", "4096"});
    EXPECT_NE(d.out.find("\n4,12,10,16,22\n"), std::string::npos);
    EXPECT_NE(d.out.find("\n4096,16773120,8411136,16777216,8546304\n"), std::string::npos);
    const auto m = run_cli({"complexity", "--measured", "--max-size", "16", "--format", "json"});
    ASSERT_EQ(m.code, kSuccess);
    const auto doc = nlohmann::json::parse(m.out);
    EXPECT_EQ(doc["rows"].size(), 3u);
    EXPECT_TRUE(doc["meta"].contains("convention"));
    EXPECT_EQ(run_cli({"complexity", "--max-size", "100"}).code, kUsage);
}

TEST_F(CliTest, ErrorsTable) {
    const auto r = run_cli({"errors", "--max-size", "128", "--theta", "pi/32"});
    ASSERT_EQ(r.code, kSuccess);
    EXPECT_NE(r.out.find("\n128,NaN,NaN,NaN,NaN,1\n"), std::string::npos);
    EXPECT_EQ(r.out, run_cli({"errors", "--max-size", "128", "--theta", "pi/32"}).out);
    const auto j = run_cli({"errors", "--max-size", "8", "--format", "json"});
    EXPECT_EQ(nlohmann::json::parse(j.out)["rows"].size(), 2u);
}

TEST_F(CliTest, Bound) {
    const auto zero = run_cli({"bound", "--size", "4", "--theta", "pi/32", "--input", write("z.csv", "0,0\n0,0\n0,0\n0,0\n")});
    ASSERT_EQ(zero.code, kSuccess);
    EXPECT_NE(zero.out.find("4,sdvm,0,"), std::string::npos);
    EXPECT_NE(zero.out.find("4,dvm,0,"), std::string::npos);
    const auto r = run_cli({"bound", "--size", "16", "--random", "--variant", "dvm", "--format", "json"});
    ASSERT_EQ(r.code, kSuccess);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_LE(doc["rows"][0]["measured_error"].get<double>(), doc["rows"][0]["bound"].get<double>());
    EXPECT_EQ(doc["meta"]["c"], 1.0);
    EXPECT_EQ(run_cli({"bound", "--size", "128", "--random"}).code, kDegenerate);
}

TEST_F(CliTest, BeamformSourceBeam) {
    const auto r = run_cli({"beamform", "--antennas", "16", "--dft-size", "8", "--source-beam", "3", "--bins", "1,2,5"});
    ASSERT_EQ(r.code, kSuccess);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "bin,argmax_beam,peak_power,degenerate");
    int rows = 0;
    while (std::getline(in, line)) {
        EXPECT_EQ(line.substr(line.find(',') + 1, 2), "3,");
        ++rows;
    }
    EXPECT_EQ(rows, 3);
}

TEST_F(CliTest, BeamformPowersAndThreads) {
    ::setenv("DVM_THREADS", "3", 1);
    const auto a = run_cli({"beamform", "--source-beam", "7", "--bins", "1,2,3,4", "--powers", "--noise", "0.1"});
    ::unsetenv("DVM_THREADS");
    const auto b = run_cli({"beamform", "--source-beam", "7", "--bins", "1,2,3,4", "--powers", "--noise", "0.1"});
    ASSERT_EQ(a.code, kSuccess);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 16);
}

TEST_F(CliTest, BeamformFromFrameFile) {
    const auto frame = run_cli({"beamform", "--antennas", "4", "--dft-size", "4", "--source-beam", "2", "--bins", "1",
                                "--powers"});
    ASSERT_EQ(frame.code, kSuccess);
    std::string csv;
    for (int l = 0; l < 4; ++l) {
        csv += "0,0,0,0,0,0,0,0\n";
    }
    const auto r = run_cli({"beamform", "--antennas", "4", "--dft-size", "4", "--input", write("f.csv", csv)});
    EXPECT_EQ(r.code, kSuccess);
    EXPECT_EQ(r.out, "bin,argmax_beam,peak_power,degenerate\n");
    EXPECT_EQ(run_cli({"beamform", "--antennas", "4", "--dft-size", "4", "--input", write("g.csv", "1,0\n")}).code,
              kUsage);
    EXPECT_EQ(run_cli({"beamform", "--source-beam", "40"}).code, kUsage);
    EXPECT_EQ(run_cli({"beamform"}).code, kUsage);
}

TEST_F(CliTest, Help) {
    const auto r = run_cli({"--help"});
    EXPECT_EQ(r.code, kSuccess);
    EXPECT_NE(r.out.find("multiply"), std::string::npos);
}

}  // namespace
}  // namespace fastdvm::cli
