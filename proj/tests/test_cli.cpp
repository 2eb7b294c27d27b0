#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Run run(const std::string& args, const std::string& stdin_text = "") {
  namespace fs = std::filesystem;
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path();
  const std::string stem = "polyspace_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++);
  const fs::path in = dir / (stem + ".in");
  const fs::path err = dir / (stem + ".err");
  std::ofstream(in) << stdin_text;
  const std::string cmd = std::string(POLYSPACE_CLI) + " " + args + " < " + in.string() + " 2> " + err.string();
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err);
  fs::remove(in);
  fs::remove(err);
  return r;
}

nlohmann::json without_timing(nlohmann::json j) {
  j.erase("timing_ms");
  return j;
}

}  // namespace

TEST(Cli, PairingValue) {
  const auto r = run("pairing --lengths 4,3,4,3,4 --exponents 0,0,0,0,2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-3\n");
}

TEST(Cli, NonGenericExitsTwo) {
  const auto r = run("pairing --lengths 1,1,1,1 --exponents 0,0,0,1");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("(+1,+1,-1,-1)"), std::string::npos) << r.err;
}

TEST(Cli, DegreeMismatchExitsTwo) {
  const auto r = run("pairing --lengths 1,1,1,2 --exponents 0,0,1,1");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("total degree 2 does not equal m - 3 = 1"), std::string::npos) << r.err;
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run("pairing --lengths 1,1,1,2").code, 1);
  EXPECT_EQ(run("pairing --lengths 1,1,1,2 --exponents 0,0,0,1 --engine fast").code, 1);
  EXPECT_EQ(run("pairing --lengths 1,x,1,2 --exponents 0,0,0,1").code, 1);
  EXPECT_EQ(run("pairing --lengths 1,1,1,2 --exponents 0,a,0,1").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, AllEnginesPlain) {
  const auto r = run("pairing --lengths 1,1,1,2 --exponents 0,0,0,1 --engine all");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "explicit -1\nrecursion -1\nkt -1\nyoshida -1\nmatch=true\n");
}

TEST(Cli, AllEnginesJson) {
  const auto r = run("pairing --lengths 1,1,1,2 --exponents 0,0,0,1 --engine all --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "pairing");
  EXPECT_EQ(j["inputs"]["lengths"], nlohmann::json({"1", "1", "1", "2"}));
  EXPECT_EQ(j["inputs"]["exponents"], nlohmann::json({0, 0, 0, 1}));
  EXPECT_EQ(j["result"], "-1");
  EXPECT_EQ(j["match"], true);
  for (const char* e : {"explicit", "recursion", "kt", "yoshida"}) EXPECT_EQ(j["engines"][e], "-1");
  EXPECT_TRUE(j["timing_ms"].is_number());
}

TEST(Cli, TsvColumnOrder) {
  const auto r = run("pairing --lengths 2/4,1,1,1,1 --exponents 0,0,0,1,1 --format tsv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "lengths\texponents\tengine\tvalue\n1/2,1,1,1,1\t0,0,0,1,1\texplicit\t1\n");
}

TEST(Cli, Triangular) {
  const auto r = run("triangular --lengths 4,3,4,3,4");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{3,4} {3,5} {4,5}\n");
}

TEST(Cli, Volume) {
  EXPECT_EQ(run("volume --lengths 1,1,1,2").out, "1\n");
  EXPECT_EQ(run("volume --lengths 4,3,4,3,4 --method partial --exponents 0,0,0,0,2").out, "-3\n");
  const auto series = run("volume --lengths 1/10,1/10,1/10,1/5 --method series --format json");
  ASSERT_EQ(series.code, 0);
  const auto j = nlohmann::json::parse(series.out);
  EXPECT_TRUE(j["tail_bound"].is_number());
  EXPECT_EQ(run("volume --lengths 1,1,1,2 --method partial").code, 1);
}

TEST(Cli, EquilateralAndSigma1) {
  EXPECT_EQ(run("equilateral --m 5 --degrees 0,0,0,0,2").out, "-3\n");
  EXPECT_EQ(run("sigma1 --m 5 --k 2").out, "5\n");
  EXPECT_EQ(run("equilateral --m 4 --degrees 0,0,0,1").code, 1);
}

TEST(Cli, Generic) {
  const auto r = run("generic --lengths 1,1,1,1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("generic false"), std::string::npos);
  EXPECT_NE(r.out.find("radius 0"), std::string::npos);
}

TEST(Cli, Table) {
  const auto r = run("table --lengths 4,3,4,3,4 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["result"].size(), 15U);
  for (const auto& row : j["result"]) {
    int top = 0;
    for (int k : row["exponents"]) top = std::max(top, k);
    EXPECT_EQ(row["value"], top == 2 ? "-3" : "1");
  }
}

TEST(Cli, VerifyRandomAndCorpus) {
  EXPECT_EQ(run("verify --max-m 8 --cases 200 --seed 7").code, 0);
  EXPECT_EQ(run("verify --max-m 3 --cases 10 --seed 1").code, 0);
  EXPECT_EQ(run("verify --corpus").code, 0);
  EXPECT_EQ(run("verify --max-m 30").code, 1);
}

TEST(Cli, VerifyCorpusMismatchExitsThree) {
  const auto path = std::filesystem::temp_directory_path() / "polyspace_bad_corpus.tsv";
  std::ofstream(path) << "4,3,4,3,4\t0,0,0,0,2\t7\tdeliberately wrong\n";
  const auto r = run("verify --corpus-file " + path.string());
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("polyspace pairing --lengths 4,3,4,3,4 --exponents 0,0,0,0,2"),
            std::string::npos)
      << r.err;
  std::filesystem::remove(path);
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
  for (const char* cmd : {"table --lengths 3,5,7,2,9,4,6,1/2", "triangular --lengths 3,5,7,2,9,4,6,1/2",
                          "volume --lengths 3,5,7,2,9,4,6,1/2"}) {
    const auto one = run(std::string(cmd) + " --threads 1");
    const auto many = run(std::string(cmd) + " --threads 6");
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, many.out) << cmd;
  }
}

TEST(Cli, JsonRecordsRoundTrip) {
  const char* commands[] = {
      "pairing --lengths 4,3,4,3,4 --exponents 0,0,1,0,1 --engine all",
      "pairing --lengths 1/3,1/3,1,1,1 --exponents 1,1,0,0,0 --engine kt",
      "table --lengths 1,1,1,2",
      "triangular --lengths 4,3,4,3,4",
      "volume --lengths 1,1,1,2",
      "volume --lengths 1/10,1/10,1/10,1/5 --method series --terms 5000",
      "volume --lengths 4,3,4,3,4 --method partial --exponents 1,1,0,0,0",
      "equilateral --m 7 --degrees 0,0,0,0,0,0,4",
      "sigma1 --m 7 --k 2",
      "generic --lengths 4,3,4,3,4",
      "verify --max-m 6 --cases 5 --seed 3",
      "verify --corpus",
  };
  for (const char* cmd : commands) {
    const auto first = run(std::string(cmd) + " --format json");
    ASSERT_EQ(first.code, 0) << cmd << "\n" << first.err;
    const auto again = run("replay -", first.out);
    ASSERT_EQ(again.code, 0) << cmd << "\n" << again.err;
    EXPECT_EQ(without_timing(nlohmann::json::parse(first.out)),
              without_timing(nlohmann::json::parse(again.out)))
        << cmd;
  }
}

TEST(Cli, ReplayRejectsGarbage) {
  EXPECT_EQ(run("replay -", "not json").code, 1);
  EXPECT_EQ(run("replay -", "{\"inputs\": {}}").code, 1);
}
