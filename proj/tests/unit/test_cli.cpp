#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "paths.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = testpaths::cli() + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  fs::path dir;
  void SetUp() override {
    dir = fs::temp_directory_path() / ("ontoforge-cli-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  std::string at(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_F(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run("").exit_code, 1);
  EXPECT_EQ(run("frobnicate").exit_code, 1);
  EXPECT_EQ(run("fetch wind_power").exit_code, 1);
  EXPECT_EQ(run("--help").exit_code, 0);
}

TEST_F(Cli, NotFoundExitsTwo) {
  EXPECT_EQ(run("fetch no_such_page --fixture-dir " + testpaths::source("fixtures/wiki") + " -o " + at("c.jsonl")).exit_code, 2);
  EXPECT_EQ(run("validate " + at("missing.ttl")).exit_code, 2);
  EXPECT_EQ(run("export --session nope --data-dir " + at("data")).exit_code, 2);
}

TEST_F(Cli, SeedHasAllClassesAndValidates) {
  ASSERT_EQ(run("seed -o " + at("seed.ttl")).exit_code, 0);
  const std::string text = slurp(at("seed.ttl"));
  std::size_t classes = 0;
  for (std::size_t pos = 0; (pos = text.find("owl:Class", pos)) != std::string::npos; ++pos) ++classes;
  EXPECT_EQ(classes, 47u);
  const CliResult v = run("validate " + at("seed.ttl"));
  EXPECT_EQ(v.exit_code, 0);
  EXPECT_NE(v.out.find("0 error(s)"), std::string::npos) << v.out;

  ASSERT_EQ(run("seed -o " + at("seed.owl")).exit_code, 0);
  EXPECT_EQ(slurp(at("seed.owl")).rfind("<?xml", 0), 0u);
  EXPECT_EQ(run("validate --json " + at("seed.owl")).exit_code, 0);
}

TEST_F(Cli, ValidateBrokenExitsThree) {
  const CliResult r = run("validate " + testpaths::source("tests/data/broken.ttl"));
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_NE(r.out.find("is-a-cycle"), std::string::npos) << r.out;
  std::ofstream(at("garbage.ttl")) << "@prefix : <x> .\n:a :b \n";
  EXPECT_EQ(run("validate " + at("garbage.ttl")).exit_code, 3);
}

TEST_F(Cli, FetchMineCurateExport) {
  ASSERT_EQ(run("fetch wind_power --fixture-dir " + testpaths::source("fixtures/wiki") + " -o " + at("c.jsonl")).exit_code, 0);
  const CliResult top = run("mine " + at("c.jsonl") + " --top 3");
  ASSERT_EQ(top.exit_code, 0);
  EXPECT_NE(top.out.find("wind"), std::string::npos);
  ASSERT_EQ(run("mine " + at("c.jsonl") + " -o " + at("cands.jsonl")).exit_code, 0);
  EXPECT_EQ(slurp(at("cands.jsonl")).rfind("{", 0), 0u);

  const CliResult cur = run("curate --corpus " + at("c.jsonl") + " --data-dir " + at("data") + " --script " +
                      testpaths::source("fixtures/curation/top10.jsonl"));
  ASSERT_EQ(cur.exit_code, 0);
  const std::string id = cur.out.substr(0, cur.out.find('\n'));
  ASSERT_EQ(id.size(), 16u);
  ASSERT_EQ(run("export --session " + id + " --data-dir " + at("data") + " -o " + at("draft.ttl")).exit_code, 0);
  EXPECT_EQ(run("validate " + at("draft.ttl")).exit_code, 0);

  // Re-running the same script conflicts with the decisions already made.
  EXPECT_EQ(run("curate --session " + id + " --data-dir " + at("data") + " --script " +
                testpaths::source("fixtures/curation/top10.jsonl"))
                .exit_code,
            1);
}
