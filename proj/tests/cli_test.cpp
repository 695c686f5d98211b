// Copyright 2026 The DDI Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "support.hpp"

namespace ddi {
namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult ddi(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, EverySubcommandOnEverySample) {
  const std::vector<std::vector<std::string>> commands = {
      {"graph"}, {"graph", "--json"}, {"graph", "--dot"}, {"graph", "--matrix"},
      {"deps"}, {"deps", "--json"}, {"deps", "--closure"},
      {"transform", "--dce"}, {"transform", "--cp"}, {"transform", "--cp-iterate"},
      {"transform", "--ivd"}, {"verify"}, {"fmt"},
  };
  for (int k = 1; k <= 9; ++k) {
    const std::string path = test::sample_path("ex" + std::to_string(k) + ".ddi");
    for (auto args : commands) {
      args.push_back(path);
      const CliResult r = ddi(args);
      EXPECT_EQ(r.code, 0) << path << " " << args[0] << "\n" << r.err;
    }
  }
}

TEST(Cli, MatrixForExampleOne) {
  const CliResult r = ddi({"graph", test::sample_path("ex1.ddi"), "--matrix"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("| a  |   | 4 | 1 | 2 |    |    |"), std::string::npos) << r.out;
}

TEST(Cli, DepsJsonForExampleTwo) {
  const CliResult r = ddi({"deps", test::sample_path("ex2.ddi"), "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["loops"][0]["parallelizable"].get<bool>());
}

TEST(Cli, ReadsStdin) {
  const CliResult r = ddi({"fmt", "-"}, "int a;a=1;print a;");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "int a;\na = 1;\nprint a;\n");
  EXPECT_EQ(ddi({"fmt"}, "int a;").code, 0);
}

TEST(Cli, GlobalCapsAfterSubcommand) {
  const std::string src = "int x[]; for (i = 0; i < 50; i++) x[i] = i;";
  EXPECT_EQ(ddi({"graph", "--unroll-cap", "10"}, src).code, 3);
  EXPECT_EQ(ddi({"--unroll-cap", "10", "graph"}, src).code, 3);
  EXPECT_EQ(ddi({"graph", "--unroll-cap", "1000"}, src).code, 0);
  EXPECT_EQ(ddi({"deps", "--closure", "--closure-cap", "1"}, "int a, b, c; b = a; c = b; a = c;").code, 3);
}

TEST(Cli, ErrorLineFormat) {
  const CliResult r = ddi({"graph"}, "int a; a = b;");
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.err.rfind("error: UnknownIdentifier: ", 0), 0u) << r.err;
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(ddi({}).code, 2);
  EXPECT_EQ(ddi({"bogus"}).code, 2);
  EXPECT_EQ(ddi({"graph", "--json", "--dot"}, "int a;").code, 2);
  EXPECT_EQ(ddi({"transform"}, "int a;").code, 2);
  EXPECT_EQ(ddi({"transform", "--dce", "--ivd"}, "int a;").code, 2);
  EXPECT_EQ(ddi({"graph", "/nonexistent/file.ddi"}).code, 2);
  EXPECT_EQ(ddi({"graph", "--unroll-cap", "0"}, "int a;").code, 2);
  const CliResult r = ddi({"graph", "--json", "--matrix"}, "int a;");
  EXPECT_EQ(r.err.rfind("error: ", 0), 0u);
}

TEST(Cli, VerifyRandom) {
  const CliResult r = ddi({"verify", "--random", "25", "--seed", "7"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, TransformJson) {
  const CliResult r = ddi({"transform", "--cp", "--json", test::sample_path("ex7.ddi")});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["report"]["rewritten_reads"][0]["variable"], "b");
  EXPECT_NE(j["source"].get<std::string>().find("a = 3 + 5;"), std::string::npos);
}

TEST(Cli, JsonOutputIsStable) {
  for (const char* cmd : {"graph", "deps"}) {
    const CliResult a = ddi({cmd, "--json", test::sample_path("ex3.ddi")});
    const CliResult b = ddi({cmd, "--json", test::sample_path("ex3.ddi")});
    EXPECT_EQ(a.out, b.out);
  }
}

}  // namespace
}  // namespace ddi
