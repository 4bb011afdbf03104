// Drives the installed binary end to end through a shell, covering every
// subcommand, both output formats, the report files, and the exit code
// contract: 0 clean, 1 failed checks, 2 usage or parse, 3 arithmetic guard.

#include <sys/wait.h>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "hfold/report.hpp"

using namespace hfold;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string scratch_path(const std::string& name) {
  static int counter = 0;
  return ::testing::TempDir() + "hfold_cli_" + std::to_string(counter++) + "_" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string out_path = scratch_path("stdout");
  const std::string err_path = scratch_path("stderr");
  const std::string command = env_prefix + "'" + HFOLD_CLI_PATH + "' " + args + " > " +
                              out_path + " 2> " + err_path;
  const int status = std::system(command.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

TEST(CliSumset, TextOutput) {
  const RunResult r = run_cli("sumset --set '0, 1, 4' --h 3");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(contains(r.out, "hA = {0, 1, 2, 3, 4, 5, 6, 8, 9, 12}")) << r.out;
  EXPECT_TRUE(contains(r.out, "|hA| = 10")) << r.out;
}

TEST(CliSumset, JsonOutput) {
  const RunResult r = run_cli("sumset --set '0, 1, 4' --h 3 --format json");
  ASSERT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("set"), json::array({0, 1, 4}));
  EXPECT_EQ(j.at("h"), 3);
  EXPECT_EQ(j.at("cardinality"), 10);
  EXPECT_EQ(j.at("elements"), json::array({0, 1, 2, 3, 4, 5, 6, 8, 9, 12}));
}

TEST(CliSumset, ReadsSetFile) {
  const std::string path = scratch_path("set.txt");
  {
    std::ofstream out(path);
    out << "4\n0\n\n1\n";
  }
  const RunResult r = run_cli("sumset --set-file " + path + " --h 2 --format json");
  std::remove(path.c_str());
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(json::parse(r.out).at("cardinality"), 6);
}

TEST(CliNormalize, BothFormats) {
  const RunResult text = run_cli("normalize --set '3, 5, 9, 13'");
  EXPECT_EQ(text.exit_code, 0);
  EXPECT_TRUE(contains(text.out, "normal form = {0, 1, 3, 5}")) << text.out;
  EXPECT_TRUE(contains(text.out, "base = 3"));
  EXPECT_TRUE(contains(text.out, "dilation = 2"));

  const RunResult r = run_cli("normalize --set '3, 5, 9, 13' --format json");
  ASSERT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("normal"), json::array({0, 1, 3, 5}));
  EXPECT_EQ(j.at("base"), 3);
  EXPECT_EQ(j.at("dilation"), 2);
}

TEST(CliInverse, ClassifiedWithCaveat) {
  const RunResult text = run_cli("inverse --h 2 --k 6 --card 13");
  EXPECT_EQ(text.exit_code, 0);
  EXPECT_TRUE(contains(text.out, "classified")) << text.out;
  EXPECT_TRUE(contains(text.out, "{2, 7}")) << text.out;
  EXPECT_TRUE(contains(text.out, "h2-degenerate-pairs")) << text.out;

  const RunResult r = run_cli("inverse --h 2 --k 6 --card 13 --format json");
  ASSERT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("status"), "classified");
  EXPECT_EQ(j.at("structures").at(0).at("hole_pairs").size(), 8u);
}

TEST(CliInverse, ImpossibleValue) {
  const RunResult r = run_cli("inverse --h 3 --k 5 --card 14 --format json");
  ASSERT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("status"), "impossible");
  EXPECT_TRUE(j.at("structures").empty());
}

TEST(CliClassify, MatchInsideWindow) {
  const RunResult r = run_cli("classify --set '0, 2, 3, 4, 5' --h 2 --format json");
  ASSERT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("cardinality"), 10);
  EXPECT_EQ(j.at("checks").at("theorem1"), "pass");
  EXPECT_EQ(j.at("checks").at("theorem2"), "vacuous");

  const RunResult text = run_cli("classify --set '0, 2, 3, 4, 5' --h 2");
  EXPECT_EQ(text.exit_code, 0);
  EXPECT_TRUE(contains(text.out, "theorem1: pass")) << text.out;
}

TEST(CliClassify, OutsideWindowIsVacuous) {
  const RunResult r = run_cli("classify --set '0, 1, 4, 5, 6' --h 3 --format json");
  ASSERT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("cardinality"), 19);
  EXPECT_EQ(j.at("checks").at("theorem1"), "vacuous");
  EXPECT_EQ(j.at("checks").at("theorem2"), "vacuous");
}

TEST(CliVerify, GapListCoversUnattainedValue) {
  const RunResult r = run_cli("verify --theorem remark1 --k 5 --h 3 --format json");
  ASSERT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("failure_count"), 0);
  const std::vector<int64_t> gaps = j.at("achievable_gaps").at("3").get<std::vector<int64_t>>();
  EXPECT_NE(std::find(gaps.begin(), gaps.end(), 14), gaps.end());
}

TEST(CliVerify, RangeOfSizesAggregates) {
  const RunResult r = run_cli("verify --theorem remark1 --k 5..6 --h 3 --format json");
  ASSERT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  ASSERT_EQ(j.at("sweeps").size(), 2u);
  EXPECT_EQ(j.at("failure_count"), 0);
  EXPECT_GT(j.at("total_sets").get<int64_t>(), 0);
}

TEST(CliVerify, FamilyTheoremUsesCatalog) {
  const RunResult r = run_cli("verify --theorem prop2 --k 5..6 --h 2..3 --format json");
  ASSERT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("spec").at("mode"), "families");
  EXPECT_EQ(j.at("failure_count"), 0);
}

TEST(CliVerify, WritesReplayableReportDeterministically) {
  const std::string report_a = scratch_path("report_a.jsonl");
  const std::string report_b = scratch_path("report_b.jsonl");
  const std::string summary_path = scratch_path("summary.json");

  const RunResult a = run_cli("verify --theorem theorem1 --k 5 --h 2..3 --jobs 1 --out " +
                              report_a + " --summary " + summary_path);
  const RunResult b = run_cli("verify --theorem theorem1 --k 5 --h 2..3 --jobs 4 --out " +
                              report_b);
  ASSERT_EQ(a.exit_code, 0);
  ASSERT_EQ(b.exit_code, 0);
  EXPECT_TRUE(contains(a.out, "OK: 15 sets, 0 failures")) << a.out;

  const std::string lines = slurp(report_a);
  EXPECT_EQ(lines, slurp(report_b));
  std::istringstream in(lines);
  std::string line;
  int64_t n_records = 0;
  while (std::getline(in, line)) {
    const VerificationRecord rec = record_from_json(json::parse(line));
    EXPECT_TRUE(replay_record(rec)) << line;
    ++n_records;
  }
  EXPECT_EQ(n_records, 30);

  const json summary = json::parse(slurp(summary_path));
  EXPECT_EQ(summary.at("total_sets"), 15);
  EXPECT_EQ(summary.at("failure_count"), 0);

  std::remove(report_a.c_str());
  std::remove(report_b.c_str());
  std::remove(summary_path.c_str());
}

TEST(CliVerify, JobsFromEnvironment) {
  const RunResult r = run_cli("verify --theorem theorem_a --k 5 --h 2 --format json",
                              "SUMSET_JOBS=2 ");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(json::parse(r.out).at("failure_count"), 0);

  const RunResult bad = run_cli("verify --theorem theorem_a --k 5 --h 2", "SUMSET_JOBS=0 ");
  EXPECT_EQ(bad.exit_code, 2);
  EXPECT_TRUE(contains(bad.err, "SUMSET_JOBS"));
}

TEST(CliExitCodes, UsageAndParseErrors) {
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
  EXPECT_EQ(run_cli("sumset --set '0, 1'").exit_code, 2);
  EXPECT_EQ(run_cli("sumset --set '0, x' --h 2").exit_code, 2);
  EXPECT_EQ(run_cli("sumset --set '0, 1' --set-file /dev/null --h 2").exit_code, 2);
  EXPECT_EQ(run_cli("sumset --h 2").exit_code, 2);
  EXPECT_EQ(run_cli("inverse --h 2 --k 4 --card 9").exit_code, 2);
  EXPECT_EQ(run_cli("verify --theorem theorem_z --k 5 --h 2").exit_code, 2);
  EXPECT_EQ(run_cli("verify --theorem theorem_a --k 9..5 --h 2").exit_code, 2);
}

TEST(CliExitCodes, ArithmeticGuard) {
  const RunResult r = run_cli("sumset --set '0, 1099511627776' --h 2");
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_TRUE(contains(r.err, "error:")) << r.err;
}

TEST(CliHelp, ListsSubcommands) {
  const RunResult r = run_cli("--help");
  EXPECT_EQ(r.exit_code, 0);
  for (const char* name : {"sumset", "normalize", "inverse", "classify", "verify"})
    EXPECT_TRUE(contains(r.out, name)) << r.out;
}

}  // namespace
