#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cylwalk/cli.hpp"

namespace cylwalk::cli {
namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;

  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

TEST(Cli, CountWorkedInstanceBothMethods) {
  const Outcome o = invoke({"count", "--M", "4", "--N", "2", "--a", "0,2", "--e", "0,2", "--method", "both"});
  EXPECT_EQ(o.status, kSuccess);
  const auto j = o.json();
  EXPECT_EQ(j["count"], "4");
  EXPECT_EQ(j["brute_count"], "4");
  EXPECT_EQ(j["methods_agree"], true);
  EXPECT_EQ(j["gf"], "1 + 2*x^2 + x^4");
}

TEST(Cli, CountAtOtherX) {
  const Outcome o = invoke({"count", "--M", "4", "--N", "2", "--a", "0,2", "--e", "0,2", "--x", "0.5", "--method", "det"});
  EXPECT_EQ(o.status, kSuccess);
  EXPECT_DOUBLE_EQ(o.json()["value"].get<double>(), 1.5625);
  EXPECT_FALSE(o.json().contains("methods_agree"));
}

TEST(Cli, ZTrivial) {
  const Outcome o = invoke({"z", "--N", "0", "--r", "3", "--nu", "2"});
  EXPECT_EQ(o.status, kSuccess);
  const auto j = o.json();
  EXPECT_EQ(j["closed_form"], 1);
  EXPECT_EQ(j["exact"], "1");
  EXPECT_EQ(j["methods_agree"], true);
}

TEST(Cli, ZSmallCount) {
  const auto j = invoke({"z", "--N", "2", "--r", "2", "--nu", "2"}).json();
  EXPECT_EQ(j["exact"], "4");
  EXPECT_EQ(j["rounded"], "4");
}

TEST(Cli, ParityViolationIsInvalidInput) {
  const Outcome o = invoke({"count", "--M", "4", "--N", "2", "--a", "0,1", "--e", "0,2"});
  EXPECT_EQ(o.status, kInvalidInput);
  EXPECT_NE(o.err.find("ParityViolation"), std::string::npos);
  EXPECT_TRUE(o.out.empty());
}

TEST(Cli, OtherInvalidInputs) {
  EXPECT_EQ(invoke({}).status, kInvalidInput);
  EXPECT_EQ(invoke({"bogus"}).status, kInvalidInput);
  EXPECT_EQ(invoke({"count", "--M", "4"}).status, kInvalidInput);
  EXPECT_EQ(invoke({"count", "--M", "4", "--N", "2", "--a", "2,0", "--e", "0,2"}).status, kInvalidInput);
  EXPECT_EQ(invoke({"count", "--M", "4", "--N", "30", "--a", "0", "--e", "0", "--method", "brute"}).status, kInvalidInput);
  EXPECT_EQ(invoke({"free-energy", "--nu", "3", "--density", "--N", "4"}).status, kInvalidInput);
  EXPECT_EQ(invoke({"free-energy", "--nu", "3"}).status, kInvalidInput);
  EXPECT_EQ(invoke({"verify", "--suite", "nope"}).status, kInvalidInput);
  EXPECT_EQ(invoke({"--format", "xml", "z", "--N", "0", "--r", "1", "--nu", "2"}).status, kInvalidInput);
}

TEST(Cli, GfSignedSerialisation) {
  const auto j = invoke({"gf", "--M", "4", "--N", "2", "--a", "0,2", "--e", "0,2", "--signed"}).json();
  EXPECT_EQ(j["gf"], "-x^4*y^-1 + 2*x^2 - y");
}

// The determinant count assumes every family sign equals (-1)^(offset sum);
// the odd cylinder breaks that, and the default cross-check reports it.
TEST(Cli, OddCylinderDisagreementIsReported) {
  const Outcome o = invoke({"count", "--M", "3", "--N", "4", "--a", "0,2", "--e", "0,2"});
  EXPECT_EQ(o.status, kVerificationFailure);
  EXPECT_EQ(o.json()["brute_count"], "27");
}

TEST(Cli, FreeEnergyModes) {
  auto j = invoke({"free-energy", "--nu", "3", "--density"}).json();
  EXPECT_EQ(j["method"], "density-closed-form");
  EXPECT_TRUE(j["N"].is_null());
  EXPECT_NEAR(j["value"].get<double>(), -0.215377298146300342729, 1e-11);

  j = invoke({"free-energy", "--nu", "3", "--N", "8", "--integral"}).json();
  EXPECT_EQ(j["method"], "integral");
  EXPECT_NEAR(j["value"].get<double>(), -1.41172347742105146379, 1e-11);

  j = invoke({"free-energy", "--nu", "2", "--N", "4", "--r", "16"}).json();
  EXPECT_EQ(j["method"], "finite-r");
  EXPECT_EQ(j["r_used"], 16);
}

TEST(Cli, FloatsUseTwelveSignificantDigits) {
  const Outcome o = invoke({"free-energy", "--nu", "3", "--density"});
  EXPECT_NE(o.out.find("\"value\": -0.215377298146,\n"), std::string::npos) << o.out;
}

TEST(Cli, CsvAndText) {
  const Outcome csv = invoke({"z", "--N", "2", "--r", "2", "--nu", "2", "--format", "csv"});
  EXPECT_EQ(csv.out, "command,N,r,nu,method,closed_form,rounded,exact,methods_agree\nz,2,2,2,both,4,4,4,true\n");
  const Outcome text = invoke({"--format", "text", "z", "--N", "2", "--r", "2", "--nu", "2", "--method", "det"});
  EXPECT_EQ(text.out, "command = z\nN = 2\nr = 2\nnu = 2\nmethod = det\nexact = 4\n");
}

TEST(Cli, OutFile) {
  const std::string path = testing::TempDir() + "walkers_out.json";
  const Outcome o = invoke({"z", "--N", "0", "--r", "3", "--nu", "2", "--out", path});
  EXPECT_EQ(o.status, kSuccess);
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), invoke({"z", "--N", "0", "--r", "3", "--nu", "2"}).out);
  std::remove(path.c_str());
}

TEST(Cli, VerifySingleSuiteIsDeterministic) {
  const Outcome a = invoke({"verify", "--suite", "circulant", "--seed", "11"});
  const Outcome b = invoke({"verify", "--suite", "circulant", "--seed", "11"});
  EXPECT_EQ(a.status, kSuccess);
  EXPECT_EQ(a.out, b.out);
  const auto j = a.json();
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["suites"][0]["failed"], 0);
}

TEST(Cli, ToleranceFromEnvironment) {
  setenv("WALKERS_TOL", "1e-7", 1);
  const auto j = invoke({"verify", "--suite", "asym"}).json();
  unsetenv("WALKERS_TOL");
  EXPECT_EQ(j["tolerance"], 1e-7);
}

}  // namespace
}  // namespace cylwalk::cli
