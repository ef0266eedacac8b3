#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sombor/cli.hpp"

using namespace sombor;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("sombor_cli_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
  ~ScopedEnv() { unsetenv(name_); }

 private:
  const char* name_;
};

}  // namespace

TEST(Cli, EnumerateSeven) {
  auto r = run_cli({"enumerate", "--n", "7", "--format", "edge-list"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_all(r.out, Format::edge_list).size(), 9u);
  auto g6 = run_cli({"enumerate", "--n", "7", "--format", "graph6"});
  EXPECT_EQ(parse_all(g6.out, Format::graph6), parse_all(r.out, Format::edge_list));
  auto oracle = run_cli({"enumerate", "--n", "7", "--oracle"});
  EXPECT_EQ(oracle.out, r.out);
}

TEST(Cli, EnumerateRoundTripsThroughCount) {
  for (int n = 1; n <= 12; ++n) {
    for (std::string format : {"edge-list", "graph6"}) {
      auto path = temp_file("roundtrip." + format);
      auto written = run_cli({"enumerate", "--n", std::to_string(n), "--format", format, "--output", path.string()});
      ASSERT_EQ(written.code, 0);
      EXPECT_TRUE(written.out.empty());
      auto recount = run_cli({"count", "--input", path.string(), "--input-format", format});
      auto direct = run_cli({"count", "--n", std::to_string(n)});
      EXPECT_EQ(recount.out, direct.out) << n << " " << format;
      std::filesystem::remove(path);
    }
  }
}

TEST(Cli, CountFormats) {
  EXPECT_EQ(run_cli({"count", "--n", "12"}).out, "355\n");
  EXPECT_EQ(run_cli({"count", "--n", "12", "--oracle", "--format", "csv"}).out, "n,count,method\n12,355,oracle\n");
  auto j = nlohmann::json::parse(run_cli({"count", "--n", "10", "--format", "json"}).out);
  EXPECT_EQ(j["count"], 75);
  EXPECT_EQ(run_cli({"count"}).code, 1);
}

TEST(Cli, RefuteNine) {
  auto r = run_cli({"refute", "--n", "9", "--precision", "50", "--format", "json"});
  EXPECT_EQ(r.code, 2);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "refuted");
  EXPECT_EQ(j["witnesses"].size(), 1u);
  EXPECT_NEAR(std::stod(j["margins"][0]["midpoint"].get<std::string>()), 88.856391223458305, 1e-9);
  EXPECT_EQ(run_cli({"refute", "--n", "11"}).code, 0);
}

TEST(Cli, VerifyTheoremCsv) {
  auto r = run_cli({"verify-theorem", "--n-max", "12", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  int rows = -1;
  while (std::getline(in, line)) {
    if (rows >= 0) {
      EXPECT_TRUE(line.ends_with(",certified"));
    }
    ++rows;
  }
  EXPECT_EQ(rows, 8);
}

TEST(Cli, OtherSubcommands) {
  EXPECT_EQ(run_cli({"verify-lemma0"}).code, 0);
  EXPECT_EQ(run_cli({"verify-classes", "--n", "10", "--format", "json"}).code, 0);
  auto ext = run_cli({"extremal", "--n", "10", "--format", "graph6"});
  EXPECT_EQ(ext.code, 0);
  EXPECT_EQ(parse(ext.out, Format::graph6), construct_extremal(10));
  auto text = run_cli({"extremal", "--n", "10"});
  EXPECT_NE(text.out.find("exact match: yes"), std::string::npos);
}

TEST(Cli, IndexReadsTrees) {
  auto path = temp_file("star.txt");
  std::ofstream(path) << "5\n0 1\n0 2\n0 3\n0 4\n";
  auto r = run_cli({"index", "--input", path.string(), "--format", "json"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j[0]["so_red"]["midpoint"].get<std::string>().rfind("1.2000000000", 0), 0u);
  EXPECT_NEAR(std::stod(j[0]["exp_so_red"]["midpoint"].get<std::string>()), 80.34214769275067, 1e-10);
  std::filesystem::remove(path);
  EXPECT_EQ(run_cli({"index", "--input", path.string()}).code, 1);
}

TEST(Cli, OutputFileAlsoPrintsTable) {
  auto path = temp_file("lemma0.json");
  auto r = run_cli({"verify-lemma0", "--format", "json", "--output", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("lemma0: certified"), std::string::npos);
  auto j = nlohmann::json::parse(slurp(path));
  EXPECT_EQ(j["margins"].size(), 10u);
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  auto none = run_cli({});
  EXPECT_EQ(none.code, 1);
  auto unknown = run_cli({"bogus"});
  EXPECT_EQ(unknown.code, 1);
  EXPECT_NE(unknown.err.find("bogus"), std::string::npos);
  auto low = run_cli({"verify-lemma0", "--precision", "10"});
  EXPECT_EQ(low.code, 1);
  EXPECT_NE(low.err.find("--precision"), std::string::npos);
  auto small = run_cli({"verify-classes", "--n", "4"});
  EXPECT_EQ(small.code, 1);
  EXPECT_NE(small.err.find("--n"), std::string::npos);
  auto flag = run_cli({"count", "--n", "5", "--frobnicate"});
  EXPECT_EQ(flag.code, 1);
  EXPECT_NE(flag.err.find("--frobnicate"), std::string::npos);
  auto format = run_cli({"refute", "--n", "9", "--format", "xml"});
  EXPECT_EQ(format.code, 1);
  EXPECT_NE(format.err.find("--format"), std::string::npos);
  EXPECT_EQ(run_cli({"verify-theorem", "--n-max", "17"}).code, 1);
  EXPECT_EQ(run_cli({"enumerate", "--n", "13", "--oracle"}).code, 1);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, PrecisionFromEnvironment) {
  {
    ScopedEnv env("SOMBOR_PRECISION", "70");
    auto r = run_cli({"refute", "--n", "7", "--format", "json"});
    EXPECT_EQ(nlohmann::json::parse(r.out)["precision_used"], 70);
    auto flag = run_cli({"refute", "--n", "7", "--format", "json", "--precision", "40"});
    EXPECT_EQ(nlohmann::json::parse(flag.out)["precision_used"], 40);
  }
  {
    ScopedEnv env("SOMBOR_PRECISION", "12");
    auto r = run_cli({"refute", "--n", "7"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("SOMBOR_PRECISION"), std::string::npos);
  }
}

TEST(Cli, ReportAllIsDeterministic) {
  auto a = run_cli({"report-all", "--n-max", "9", "--deterministic"});
  auto b = run_cli({"report-all", "--n-max", "9", "--deterministic", "--workers", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["status"], "certified");
  // lemma0, theorem, five class reports, five conjecture reports
  EXPECT_EQ(j["reports"].size(), 12u);
}
