#include <array>
#include <cstdio>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"

namespace orbitdeg::cli {
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

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string run_binary(const std::string& args) {
  const std::string command = std::string(ORBITDEG_CLI_PATH) + " " + args;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  std::string output;
  std::array<char, 4096> buffer{};
  while (std::fgets(buffer.data(), buffer.size(), pipe.get()) != nullptr) output += buffer.data();
  return output;
}

TEST(Count, Classes) {
  const Result r = run_cli({"count", "--quantity", "classes", "--n", "4", "--V", "4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "quantity,n,V,exact,decimal,extension\nclasses,4,4,21,21.0000000000000,false\n");
}

TEST(Count, WalksOfLengthOne) {
  const Result r = run_cli({"count", "--quantity", "walks", "--n", "1", "--V", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(lines(r.out).at(1), "walks,1,5,0,0,false");
}

TEST(Count, MeanDegeneracyIsExactRational) {
  const Result r = run_cli({"--format", "json", "count", "--quantity", "mean-degeneracy", "--n", "3", "--V", "6"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "{\"quantity\":\"mean_degeneracy\",\"n\":3,\"V\":6,\"exact\":\"2/1\",\"decimal\":\"2.00000000000000\","
            "\"extension\":false}\n");
}

TEST(Count, CompositeLengthMarksExtension) {
  const Result r = run_cli({"count", "--quantity", "orbits", "--n", "4", "--V", "2"});
  EXPECT_EQ(lines(r.out).at(1), "orbits,4,2,1,1.00000000000000,true");
  const Result naive = run_cli({"count", "--quantity", "orbits", "--n", "4", "--V", "2", "--naive-orbits"});
  EXPECT_EQ(lines(naive.out).at(1), "orbits,4,2,1/2,0.500000000000000,false");
}

TEST(Count, ExitCodes) {
  EXPECT_EQ(run_cli({"count", "--quantity", "mean-degeneracy", "--n", "3", "--V", "2"}).code, kExitUndefined);
  EXPECT_EQ(run_cli({"count", "--quantity", "classes", "--n", "0", "--V", "4"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"count", "--quantity", "bogus", "--n", "4", "--V", "4"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"count", "--n", "4"}).code, kExitUsage);
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"count", "--quantity", "asymptotic-ratio", "--n", "5", "--V", "4"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

TEST(Grid, SingleCell) {
  const Result r = run_cli({"grid", "--n", "4", "--V", "4", "--quantities", "classes"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "n,V,classes,extension\n4,4,21,false\n");
}

TEST(Grid, RowOrderAndAgreementWithCount) {
  const Result r = run_cli({"grid", "--n", "2:7", "--V", "2:5", "--quantities", "classes,orbits,mean-degeneracy"});
  ASSERT_EQ(r.code, kExitOk);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 1U + 6U * 4U);
  EXPECT_EQ(rows[0], "n,V,classes,orbits,mean_degeneracy,extension");
  std::size_t k = 1;
  for (int n = 2; n <= 7; ++n) {
    for (int V = 2; V <= 5; ++V, ++k) {
      const std::string prefix = std::to_string(n) + "," + std::to_string(V) + ",";
      ASSERT_EQ(rows[k].rfind(prefix, 0), 0U) << rows[k];
      const Result single = run_cli({"count", "--quantity", "classes", "--n", std::to_string(n), "--V",
                                     std::to_string(V)});
      const std::string exact = lines(single.out).at(1).substr(("classes," + prefix).size());
      EXPECT_EQ(rows[k].substr(prefix.size(), rows[k].find(',', prefix.size()) - prefix.size()),
                exact.substr(0, exact.find(',')));
    }
  }
  // Undefined degeneracy leaves an empty field.
  EXPECT_EQ(rows[1 + 4], "3,2,0,0,,false");
}

TEST(Grid, FixedVertexCountGrowsBeyondTwo) {
  const Result r = run_cli({"grid", "--n", "2:30", "--V", "4", "--quantities", "mean_degeneracy"});
  ASSERT_EQ(r.code, kExitOk);
  const auto rows = lines(r.out);
  const double last = std::stod(rows.back().substr(rows.back().find(',', 3) + 1));
  EXPECT_GT(last, 1000.0);
}

TEST(Grid, InvalidRanges) {
  EXPECT_EQ(run_cli({"grid", "--n", "5:3", "--V", "4"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"grid", "--n", "1:3", "--V", "4"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"grid", "--n", "x", "--V", "4"}).code, kExitUsage);
}

TEST(Fig3, HeaderAndConvergence) {
  const Result r = run_cli({"fig3", "--V", "3", "--n-max", "400", "--n-min", "100", "--n-step", "100"});
  ASSERT_EQ(r.code, kExitOk);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 5U);
  EXPECT_EQ(rows[0], "V,n,exact_pair,asymptotic_pair,ratio");
  EXPECT_EQ(rows[1], "3,100,2601,2500.00000000000,1.04040000000000");
  EXPECT_EQ(rows[4], "3,400,40401,40000.0000000000,1.01002500000000");
  EXPECT_EQ(run_cli({"fig3", "--V", "2", "--n-max", "10"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"fig3", "--V", "3", "--n-max", "10", "--n-min", "3"}).code, kExitUsage);
}

TEST(Enumerate, LineCounts) {
  const Result k4 = run_cli({"enumerate", "--n", "4", "--V", "4"});
  EXPECT_EQ(lines(k4.out).size(), 21U);
  const Result k3 = run_cli({"enumerate", "--n", "3", "--V", "3"});
  EXPECT_EQ(k3.out, "{\"period\":3,\"code\":[[1,2,1],[1,3,1],[2,3,1]],\"degeneracy\":2,\"example_orbit\":[1,2,3]}\n");
  const Result k2 = run_cli({"enumerate", "--n", "5", "--V", "2"});
  EXPECT_EQ(k2.code, kExitOk);
  EXPECT_TRUE(k2.out.empty());
  const Result csv = run_cli({"--format", "csv", "enumerate", "--n", "2:4", "--V", "2"});
  EXPECT_EQ(csv.out, "period,code,degeneracy,example_orbit\n2,1-2:2,1,1 2\n4,1-2:4,1,1 2 1 2\n");
}

TEST(Enumerate, CapsGiveExitFour) {
  EXPECT_EQ(run_cli({"enumerate", "--n", "13", "--V", "3"}).code, kExitResourceCap);
  EXPECT_EQ(run_cli({"enumerate", "--n", "6", "--V", "4", "--n-cap", "5"}).code, kExitResourceCap);
  EXPECT_EQ(run_cli({"spectrum", "--V", "7", "--n-max", "3"}).code, kExitResourceCap);
}

TEST(Spectrum, TwoVertices) {
  const Result r = run_cli({"spectrum", "--V", "2", "--n-max", "4"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(lines(r.out).size(), 2U);
  const Result csv = run_cli({"spectrum", "--V", "2", "--n-max", "4", "--format", "csv"});
  EXPECT_EQ(lines(csv.out).at(0), "period,length,degeneracy");
}

TEST(Spectrum, BinaryOutputIsByteStable) {
  const std::string args = "spectrum --V 4 --n-max 6 --scheme uniform-random --seed 11";
  const std::string first = run_binary(args);
  EXPECT_FALSE(first.empty());
  EXPECT_EQ(first, run_binary(args));
  EXPECT_NE(first, run_binary("spectrum --V 4 --n-max 6 --scheme uniform-random --seed 12"));
}

}  // namespace
}  // namespace orbitdeg::cli
