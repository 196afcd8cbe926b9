#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mnp/cli.hpp"
#include "mnp/json_io.hpp"

using namespace mnp;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(CliSolve, RunningExampleHuman) {
  const auto r = run({"solve", "-k", "2", "--list", "1,1,2,3,4,5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("group 0: {1,1,2,3}"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("group 1: {4,5}"), std::string::npos);
  EXPECT_NE(r.out.find("L(X|A): 22/16 = 1.375 bits"), std::string::npos);
}

TEST(CliSolve, RunningExampleJson) {
  const auto r = run({"solve", "-k", "2", "--list", "1,1,2,3,4,5", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  for (const char* key : {"instance", "k", "objective", "partition", "subset_sums", "report", "trace"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["subset_sums"], json::parse("[7,9]"));
  EXPECT_EQ(j["report"]["compression_numerator"], 22);
  EXPECT_EQ(j["trace"]["steps"], json::parse("[[1,1,2],[2,2,4],[3,4,7],[4,5,9]]"));
}

TEST(CliSolve, SingleElement) {
  const auto r = run({"solve", "-k", "1", "--list", "5", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["report"]["compression_numerator"], 0);
  EXPECT_EQ(j["report"]["entropy_bits"], 0.0);
  EXPECT_EQ(j["report"]["min_diff"], 0);
  EXPECT_EQ(j["partition"]["assignment"], json::parse("[0]"));
}

TEST(CliSolve, EntropyOracle) {
  const auto r = run({"solve", "-k", "2", "--list", "1,1,2,3,4,5", "--objective", "entropy", "--oracle", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["report"]["entropy_bits"].get<double>(), 1.0, 1e-12);
  EXPECT_EQ(j["report"]["min_diff"], 0);
  EXPECT_EQ(j["oracle"]["optimal_count"], 3);
}

TEST(CliSolve, Greedy) {
  const auto r = run({"solve", "-k", "2", "--list", "1,1,2,3,4,5", "--greedy", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["subset_sums"], json::parse("[8,8]"));
}

TEST(CliSolve, JsonRoundTripsThroughEvaluate) {
  const auto r = run({"solve", "-k", "3", "--list", "13 7 22 5 5 9 31 2 8", "--json"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  const Instance inst(j["instance"]["weights"].get<std::vector<std::int64_t>>());
  const auto again = evaluate(inst, partition_from_json(j["partition"]));
  const auto reported = report_from_json(j["report"]);
  EXPECT_EQ(again.compression_numerator, reported.compression_numerator);
  EXPECT_EQ(again.min_diff, reported.min_diff);
  EXPECT_NEAR(again.entropy_bits, reported.entropy_bits, 1e-9);
}

TEST(CliSolve, ByteIdenticalForIdenticalConfig) {
  const std::vector<std::string> args{"oracle", "-k", "3", "--list", "4,8,15,16,23,42", "--objective",
                                      "entropy", "--json", "--seed", "7"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> verify{"verify", "--trials", "5", "--max-n", "6", "--json"};
  EXPECT_EQ(run(verify).out, run(verify).out);
}

TEST(CliErrors, ExitCodes) {
  EXPECT_EQ(run({"solve", "-k", "2", "--list", "1 0 2"}).code, cli::kInputError);
  EXPECT_EQ(run({"solve", "-k", "2", "--list", "abc"}).code, cli::kInputError);
  EXPECT_EQ(run({"solve", "-k", "2"}).code, cli::kInputError);
  EXPECT_EQ(run({"solve", "-k", "0", "--list", "1"}).code, cli::kInputError);
  EXPECT_EQ(run({"solve", "--list", "1", "--objective", "nope"}).code, cli::kInputError);
  EXPECT_EQ(run({"solve", "--bogus"}).code, cli::kInputError);
  EXPECT_EQ(run({}).code, cli::kInputError);
  EXPECT_EQ(run({"solve", "--file", "/nonexistent/instance.txt"}).code, cli::kInputError);
  EXPECT_EQ(run({"solve", "-k", "2", "--objective", "entropy", "--list", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15"}).code,
            cli::kSizeGuard);
  EXPECT_EQ(run({"oracle", "-k", "7", "--list", "1,2,3"}).code, cli::kSizeGuard);
  EXPECT_EQ(run({"--help"}).code, cli::kSuccess);
}

TEST(CliTrace, RunningExample) {
  const auto r = run({"trace", "-k", "2", "--list", "1,1,2,3,4,5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 6u);
  EXPECT_EQ(ls[0], "merge steps: 4");
  EXPECT_EQ(ls[1], "   (1,1,2,3,4,5)");
  EXPECT_EQ(ls[2], "-> (*2*,2,3,4,5)");
  EXPECT_EQ(ls[3], "-> (3,*4*,4,5)");
  EXPECT_EQ(ls[4], "-> (4,5,*7*)");
  EXPECT_EQ(ls[5], "-> (*7*,*9*)");
}

TEST(CliTrace, NoStepsWhenNEqualsK) {
  const auto r = run({"trace", "-k", "3", "--list", "3,1,2"});
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0], "merge steps: 0");
  EXPECT_EQ(ls[1], "   (1,2,3)");
}

TEST(CliTrace, LastListSumsToTotal) {
  const auto r = run({"trace", "-k", "3", "--list", "9 4 4 1 7 2 2 6 3 3", "--json"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  std::int64_t last = 0;
  for (const auto& e : j["trace"]["lists"].back()) last += e["value"].get<std::int64_t>();
  EXPECT_EQ(last, j["instance"]["total"].get<std::int64_t>());
  EXPECT_EQ(j["trace"]["lists"].size(), 8u);
}

TEST(CliVerify, SmallSweepPasses) {
  const auto r = run({"verify", "--trials", "5", "--max-n", "6"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("all suites passed"), std::string::npos);
}

TEST(CliVerify, CorruptedInstanceFile) {
  const auto path = std::filesystem::temp_directory_path() / "mnp_cli_corrupted.txt";
  {
    std::ofstream f(path);
    f << "1, 2, three\n";
  }
  EXPECT_EQ(run({"verify", "--file", path.string(), "--trials", "2"}).code, cli::kInputError);
  std::filesystem::remove(path);
}

TEST(CliVerify, InstanceFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "mnp_cli_instance.txt";
  {
    std::ofstream f(path);
    f << "# running example\n1 1 2\n3 4 5\n";
  }
  const auto r = run({"verify", "--file", path.string(), "--trials", "3", "--max-n", "5"});
  EXPECT_EQ(r.code, 0) << r.out;
  std::filesystem::remove(path);
}

TEST(CliBench, SingleElement) {
  const auto r = run({"bench", "-k", "1", "--list", "5", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 1u);
  EXPECT_EQ(j["rows"][0]["n"], 1);
  EXPECT_LT(j["rows"][0]["ms"].get<double>(), 10.0);
}
