#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace areawalk;
using areawalk::cli::render_pretty;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
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

TEST(RenderPretty, Examples) {
  EXPECT_EQ(render_pretty(AreaPolynomial{{-2, 12}, {0, 40}, {2, 12}}), "40 + 12(Q^-2+Q^2)");
  EXPECT_EQ(render_pretty(AreaPolynomial{{-1, 2}, {0, 4}, {1, 2}}), "4 + 2(Q^-1+Q)");
  EXPECT_EQ(render_pretty(AreaPolynomial{{-1, 1}, {1, 1}}), "(Q^-1+Q)");
  EXPECT_EQ(render_pretty(AreaPolynomial{}), "0");
  EXPECT_EQ(render_pretty(AreaPolynomial{{0, 4}}), "4");
  EXPECT_EQ(render_pretty(AreaPolynomial{{-2, 3}, {1, 1}}), "3Q^-2 + Q");
  EXPECT_EQ(render_pretty(AreaPolynomial{{0, 2}, {3, -1}}), "2 - Q^3");
}

TEST(ParsePsList, Forms) {
  using V = std::vector<std::pair<int, int>>;
  EXPECT_EQ(cli::parse_ps_list("1:2,3:3"), (V{{1, 2}, {3, 3}}));
  EXPECT_EQ(cli::parse_ps_list("1,2"), (V{{1, 2}}));
  EXPECT_THROW(cli::parse_ps_list("1:x"), cli::UsageError);
  EXPECT_THROW(cli::parse_ps_list("1,2,3"), cli::UsageError);
}

TEST(CliGf, WorkedExamples) {
  EXPECT_EQ(run({"gf", "--length", "3"}).out, "40 + 12(Q^-2+Q^2)\n");
  EXPECT_EQ(run({"gf", "-n", "4"}).out, "80 + 48(Q^-1+Q) + 16(Q^-2+Q^2) + 16(Q^-3+Q^3) + 8(Q^-4+Q^4)\n");
  EXPECT_EQ(run({"gf", "--length", "2", "--line", "0"}).out, "4 + 2(Q^-1+Q)\n");
}

TEST(CliGf, UnreachableLineIsEmpty) {
  const Result r = run({"gf", "--length", "2", "--line", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n");
}

TEST(CliGf, ParityMismatchIsAnError) {
  const Result r = run({"gf", "--length", "4", "--line", "-1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("parity"), std::string::npos) << r.err;
}

TEST(CliGf, CsvAndJson) {
  EXPECT_EQ(run({"gf", "--length", "2", "--format", "csv"}).out, "length,line,t,count\n2,,-1,4\n2,,0,8\n2,,1,4\n");
  EXPECT_EQ(run({"gf", "--length", "2", "--line", "-2", "--format", "csv"}).out,
            "length,line,t,count\n2,-2,-1,1\n2,-2,0,2\n2,-2,1,1\n");
  EXPECT_EQ(run({"gf", "--length", "1", "--format", "json"}).out, R"({"length":1,"line":null,"coeffs":{"0":"4"}})"
                                                                  "\n");
}

TEST(CliGf, OutputIsDeterministic) {
  const Result a = run({"gf", "--length", "15", "--format", "json", "--threads", "1"});
  const Result b = run({"gf", "--length", "15", "--format", "json", "--threads", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliGf, CapsAreEnforced) {
  EXPECT_EQ(run({"gf", "--length", "29"}).code, 2);
  EXPECT_EQ(run({"gf", "--length", "5", "--formula-cap", "4"}).code, 2);
  EXPECT_EQ(run({"gf", "--length", "5", "--formula-cap", "0"}).code, 2);
  EXPECT_EQ(run({"gf", "--length", "0"}).code, 2);
  EXPECT_EQ(run({"gf"}).code, 2);
}

TEST(CliCount, WorkedExamples) {
  EXPECT_EQ(run({"count", "--length", "4"}).out,
            "n,t,count\n4,-4,8\n4,-3,16\n4,-2,16\n4,-1,48\n4,0,80\n4,1,48\n4,2,16\n4,3,16\n4,4,8\n");
  EXPECT_EQ(run({"count", "--length", "1"}).out, "n,t,count\n1,0,4\n");
  EXPECT_EQ(run({"count", "--length", "3", "--only-t", "2"}).out, "n,t,count\n3,2,12\n");
  EXPECT_EQ(run({"count", "--length", "3", "--only-t", "2", "--format", "pretty"}).out, "12\n");
  EXPECT_EQ(run({"count", "--length", "3", "--only-t", "1", "--format", "pretty"}).out, "0\n");
}

TEST(CliCount, Diagonal) {
  EXPECT_EQ(run({"count", "--length", "2", "--line", "0"}).out, "n,t,count\n2,-1,2\n2,0,4\n2,1,2\n");
  EXPECT_EQ(run({"count", "--length", "3", "--line", "0"}).code, 2);
  EXPECT_EQ(run({"count", "--length", "4", "--line", "2"}).code, 2);
}

TEST(CliVerify, FormulasSuitePasses) {
  const Result r = run({"verify", "--suite", "formulas", "--max-n", "10"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  for (const auto& line : lines(r.out)) {
    EXPECT_NE(line.find(R"("status":"pass")"), std::string::npos) << line;
    EXPECT_NE(line.find(R"("residual":)"), std::string::npos) << line;
  }
}

TEST(CliVerify, TorusSuiteReportsOrientation) {
  const Result r = run({"verify", "--suite", "torus", "--ps", "1,2", "--max-n", "8"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("torus.trace_gf[1:2]"), std::string::npos);
  EXPECT_NE(r.out.find("orientation"), std::string::npos);
}

TEST(CliVerify, OtherSuitesPass) {
  for (const char* suite : {"oracle", "restricted", "properties"}) {
    const Result r = run({"verify", "--suite", suite, "--max-n", "10"});
    EXPECT_EQ(r.code, 0) << suite << '\n' << r.out << r.err;
    EXPECT_FALSE(r.out.empty());
  }
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "torus", "--ps", "3:1"}).code, 2);
}

TEST(CliBench, EmitsOneRowPerLength) {
  const Result r = run({"bench", "--max-n", "6", "--method", "dp"});
  EXPECT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[0], "n,method,millis,terms");
  EXPECT_EQ(rows[1].rfind("1,dp,", 0), 0u);
  EXPECT_EQ(run({"bench", "--max-n", "15", "--method", "brute"}).code, 2);
  EXPECT_EQ(run({"bench", "--max-n", "3", "--method", "magic"}).code, 2);
}

TEST(CliWalk, AreaAndEndpoint) {
  EXPECT_EQ(run({"walk", "RULD"}).out, "walk RULD: endpoint (0,0), doubled area t=2\n");
  EXPECT_EQ(run({"walk", "RU", "--format", "csv"}).out, "walk,k,l,t\nRU,1,1,1\n");
  EXPECT_EQ(run({"walk", "RX"}).code, 2);
}

TEST(CliOracle, HistogramCsv) {
  EXPECT_EQ(run({"oracle", "--length", "1", "--method", "brute"}).out,
            "length,k,l,t,count\n1,-1,0,0,1\n1,0,-1,0,1\n1,0,1,0,1\n1,1,0,0,1\n");
  EXPECT_EQ(run({"oracle", "--length", "15"}).code, 0);
  EXPECT_EQ(run({"oracle", "--length", "15", "--method", "brute"}).code, 2);
}

TEST(CliRep, Json) {
  const Result r = run({"rep", "--ps", "1:2,2:2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 2u);
  EXPECT_NE(r.out.find(R"("dim":5)"), std::string::npos);
}

TEST(CliUsage, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"gf", "--length", "2", "--bogus"}).code, 2);
  EXPECT_EQ(run({"gf", "--length", "2", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliUsage, ThreadsFromEnvironment) {
  ::setenv("AREAWALK_THREADS", "2", 1);
  EXPECT_EQ(run({"gf", "--length", "3"}).out, "40 + 12(Q^-2+Q^2)\n");
  ::setenv("AREAWALK_THREADS", "lots", 1);
  EXPECT_EQ(run({"gf", "--length", "3"}).code, 2);
  EXPECT_EQ(run({"gf", "--length", "3", "--threads", "1"}).code, 0);
  ::unsetenv("AREAWALK_THREADS");
}

TEST(CliUsage, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "areawalk_cli_out_test.csv";
  const Result r = run({"gf", "--length", "1", "--format", "csv", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), "length,line,t,count\n1,,0,4\n");
  std::filesystem::remove(path);
}
