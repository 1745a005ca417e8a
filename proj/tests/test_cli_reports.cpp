#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "pnl/constructions.hpp"
#include "pnl/report.hpp"
#include "pnl/suites.hpp"

using namespace pnl;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(PNL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("pnl_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Report, DistributionJsonOfMaioranaMcFarland) {
  const auto f = build({ConstructionKind::MaioranaMcFarland, 2, 6, 3});
  EXPECT_EQ(distribution_json(preimage_map(f), 6).dump(), R"({"distribution":[[15,1],[7,7]],"type":"plus"})");
}

TEST(Report, EmptySuiteListIsValid) {
  const auto json = Json::parse(emit_report(std::vector<VerificationSuite>{}, Format::Json));
  EXPECT_TRUE(json["suites"].empty());
  EXPECT_EQ(emit_report(std::vector<VerificationSuite>{}, Format::Csv), "suite,case,passed,observed,expected\n");
}

TEST(Report, CsvHasOneRowPerTableEntry) {
  const auto rows = surjectivity_table(3, {5, 6, 7}, {});
  const auto csv = emit_report(rows, Format::Csv);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  EXPECT_NE(csv.find("3,5,3,true,false,27"), std::string::npos);
}

TEST(Report, CyclotomicValuesAsCoefficientArrays) {
  EXPECT_EQ(to_json(CyclotomicInt::zeta(5, 2)).dump(), "[0,0,1,0]");
  EXPECT_EQ(to_json(CyclotomicInt::integer(2, -4)).dump(), "[-4]");
}

TEST(Report, WallTimeOnlyWhenRequested) {
  VerificationSuite s;
  s.id = "x";
  s.wall_seconds = 1.25;
  s.check("a, with comma", true, "1", "1");
  EXPECT_EQ(to_json(s).dump().find("wall_seconds"), std::string::npos);
  EXPECT_NE(to_json(s, true).dump().find("wall_seconds"), std::string::npos);
  EXPECT_NE(emit_report({s}, Format::Csv).find("\"a, with comma\""), std::string::npos);
  EXPECT_THROW(format_from_name("yaml"), Error);
}

TEST(Suites, RegistryIsCompleteAndUnique) {
  std::set<std::string> ids;
  for (const auto& s : suite_registry()) {
    EXPECT_TRUE(ids.insert(s.id).second) << s.id;
    EXPECT_FALSE(s.title.empty());
  }
  EXPECT_GE(ids.size(), 12u);
  EXPECT_THROW(run_suite("no-such-suite"), Error);
}

TEST(Suites, CatalogM2HasTwoEntriesEachPassing) {
  const auto s = run_suite("catalog-m2");
  EXPECT_TRUE(s.passed());
}

TEST(Suites, DeterministicGivenSeed) {
  const auto a = run_suite("oracle", {7, false});
  const auto b = run_suite("oracle", {7, false});
  EXPECT_EQ(emit_report({a}, Format::Json), emit_report({b}, Format::Json));
}

TEST(Cli, ConstructAnalyzeRoundTrip) {
  const auto path = temp_file("mm63.fn");
  ASSERT_EQ(run_cli("construct mm --p 2 --n 6 --m 3 -o " + path.string()).status, 0);
  const auto r = run_cli("analyze " + path.string() + " --json");
  ASSERT_EQ(r.status, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["distribution"].dump(), "[[15,1],[7,7]]");
  EXPECT_EQ(j["type"], "plus");
  EXPECT_EQ(j["checks"]["perfect_nonlinear"], true);
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("verify catalog-m2 direct-sum").status, 0);
  EXPECT_EQ(run_cli("verify no-such-suite").status, 2);
  EXPECT_EQ(run_cli("").status, 2);
  EXPECT_EQ(run_cli("construct mm --p 4").status, 2);
  EXPECT_EQ(run_cli("experiment surjectivity --p 3 --n 10").status, 2);
}

TEST(Cli, HelpListsEverySuite) {
  const auto r = run_cli("--help");
  EXPECT_EQ(r.status, 0);
  for (const auto& s : suite_registry()) EXPECT_NE(r.out.find(s.id), std::string::npos) << s.id;
}

TEST(Cli, ByteIdenticalReports) {
  const auto a = run_cli("verify constructions extremal-bounds --json --seed 3");
  const auto b = run_cli("verify constructions extremal-bounds --json --seed 3");
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}

TEST(Cli, WalshAndEnumerate) {
  const auto path = temp_file("anf.fn");
  ASSERT_EQ(run_cli("construct anf --p 2 --n 2 --anf 'x1*x2' -o " + path.string()).status, 0);
  const auto w = Json::parse(run_cli("walsh " + path.string() + " --json").out);
  EXPECT_EQ(w["components"][0]["spectrum"].dump(), "[[2],[2],[2],[-2]]");
  const auto e = Json::parse(run_cli("enumerate --p 2 --m 4 --n 8 --json").out);
  EXPECT_EQ(e["admissible"].size(), 14u);
  std::filesystem::remove(path);
}
