#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qseries/oracle.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// stderr is folded into the captured output when `merge` is set.
Run run(const std::string& args, bool merge = false,
        const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + QSERIES_CLI + " " +
                          args + (merge ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

TEST(Cli, ExpandBipartitions) {
  const auto r = run("expand 'f2*f15/f1^2' --order 3");
  EXPECT_EQ(r.code, 0);
  const auto b = qseries::oracle::count_bipartitions(2, 15, 3);
  EXPECT_EQ(r.out, b[0].get_str() + " " + b[1].get_str() + " " +
                       b[2].get_str() + "\n");
}

TEST(Cli, ExpandPentagonal) {
  const auto r = run("expand f1 --order 13");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 -1 -1 0 0 1 0 1 0 0 0 0 -1\n");
}

TEST(Cli, ExpandErrors) {
  const auto zero = run("expand '1/0' --order 5", true);
  EXPECT_EQ(zero.code, 2);
  EXPECT_NE(zero.out.find("1/0"), std::string::npos);
  const auto bad = run("expand 'f1 + (f2' --order 5", true);
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.out.find("offset 8"), std::string::npos);
  EXPECT_EQ(run("expand f1 --mod 1").code, 5);
  EXPECT_EQ(run("expand f1 --format xml").code, 5);
}

TEST(Cli, ExpandModEqualsExactReduced) {
  const auto exact = run("expand 'f1^9*f7/f2^3' --order 60 --format json");
  const auto mod = run("expand 'f1^9*f7/f2^3' --order 60 --mod 11 --format json");
  ASSERT_EQ(exact.code, 0);
  ASSERT_EQ(mod.code, 0);
  const auto je = nlohmann::json::parse(exact.out);
  const auto jm = nlohmann::json::parse(mod.out);
  ASSERT_EQ(je["coefficients"].size(), 60u);
  ASSERT_EQ(jm["coefficients"].size(), 60u);
  EXPECT_EQ(jm["ring"], "Z/11");
  for (std::size_t i = 0; i < 60; ++i) {
    mpz_class c(je["coefficients"][i].get<std::string>());
    mpz_class red;
    mpz_fdiv_r_ui(red.get_mpz_t(), c.get_mpz_t(), 11);
    EXPECT_EQ(red.get_str(), jm["coefficients"][i].get<std::string>()) << i;
  }
}

TEST(Cli, ExpandCsvHasOneRowPerExponent) {
  const auto r = run("expand f1 --order 4 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out),
            (std::vector<std::string>{"n,c_n", "0,1", "1,-1", "2,-1", "3,0"}));
}

TEST(Cli, DefaultOrderFromEnvironment) {
  const auto r = run("expand f1", false, "QSERIES_DEFAULT_ORDER=7");
  EXPECT_EQ(r.out, "1 -1 -1 0 0 1 0\n");
  EXPECT_EQ(run("expand f1", false, "QSERIES_DEFAULT_ORDER=x").code, 5);
  EXPECT_EQ(run("expand f1 --order 3", false, "QSERIES_DEFAULT_ORDER=7").out,
            "1 -1 -1\n");
}

TEST(Cli, VerifyGroup) {
  const auto r = run("verify --filter b215 --format json");
  EXPECT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 6u);
  for (const auto& l : ls) {
    const auto j = nlohmann::json::parse(l);
    EXPECT_EQ(j["status"], "pass");
  }
}

TEST(Cli, VerifyJsonSchema) {
  const auto r = run("verify --filter eq-j1,b711-chain-11,b215-b1 --order 50 "
                     "--count 30 --format json");
  EXPECT_EQ(r.code, 0);
  std::vector<std::string> ids;
  for (const auto& l : lines(r.out)) {
    const auto j = nlohmann::json::parse(l);
    ASSERT_TRUE(j.is_object());
    EXPECT_TRUE(j["id"].is_string());
    EXPECT_TRUE(j["status"] == "pass" || j["status"] == "fail");
    EXPECT_TRUE(j["method"].is_string());
    EXPECT_TRUE(j["order"].is_number_unsigned());
    EXPECT_TRUE(j["count"].is_number_unsigned());
    EXPECT_TRUE(j["checks"].is_number_unsigned());
    EXPECT_TRUE(j["mismatch"].is_null() || j["mismatch"].is_object());
    EXPECT_TRUE(j["millis"].is_number());
    EXPECT_EQ(j.size(), 8u);
    ids.push_back(j["id"]);
  }
  EXPECT_EQ(ids, (std::vector<std::string>{"eq-j1", "b215-b1", "b711-chain-11"}));
}

TEST(Cli, VerifySingleItems) {
  const auto j1 = run("verify --filter eq-j1 --order 50");
  EXPECT_EQ(j1.code, 0);
  EXPECT_NE(j1.out.find("eq-j1"), std::string::npos);
  EXPECT_NE(j1.out.find("pass"), std::string::npos);
  const auto last = run("verify --filter b711-chain-11 --format csv");
  EXPECT_EQ(last.code, 0);
  ASSERT_EQ(lines(last.out).size(), 2u);
  EXPECT_EQ(lines(last.out)[1].substr(0, 19), "b711-chain-11,pass,");
}

TEST(Cli, VerifyUnknownFilter) {
  EXPECT_EQ(run("verify --filter nope").code, 3);
  EXPECT_EQ(run("verify --filter eq-j1,nope").code, 3);
}

TEST(Cli, ScanExamples) {
  auto tail = [](const std::string& out) { return lines(out).back(); };
  const auto a = run("scan 243 17 81 23 17 200");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(tail(a.out), "all zero: yes");
  const auto b = run("scan 2 15 9 8 5 500");
  EXPECT_EQ(tail(b.out), "all zero: yes");
  const auto c = run("scan 2 15 9 7 5 50");
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(tail(c.out), "all zero: no");
}

TEST(Cli, ScanControlAgreesWithOracle) {
  const auto r = run("scan 2 15 9 7 5 50 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto b = qseries::oracle::count_bipartitions(2, 15, 9 * 49 + 8);
  bool nonzero = false;
  for (std::size_t n = 0; n < 50; ++n) {
    mpz_class v;
    mpz_fdiv_r_ui(v.get_mpz_t(), b[9 * n + 7].get_mpz_t(), 5);
    EXPECT_EQ(j["rows"][n]["residue"], v.get_str());
    nonzero = nonzero || v != 0;
  }
  EXPECT_TRUE(nonzero);
  EXPECT_EQ(j["all_zero"], false);
}

TEST(Cli, ScanBudget) {
  const auto r = run("scan 2 15 9999 7 5 1000", true);
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.out.find("9989009"), std::string::npos);
  EXPECT_EQ(run("scan 2 15 81 7 5 10 --max-order 100").code, 4);
  EXPECT_EQ(run("scan 2 15 9 9 5 10").code, 5);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 5);
  EXPECT_EQ(run("frobnicate").code, 5);
  EXPECT_EQ(run("expand").code, 5);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, ListShowsEveryId) {
  const auto r = run("list");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 45u);
}

}  // namespace
