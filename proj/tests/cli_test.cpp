#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "group_spec.hpp"
#include "permpoly/errors.hpp"
#include "permpoly/theorem_report.hpp"

namespace permpoly::cli {
namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run_command(args, out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("permpoly_cli_test_" + name);
}

TEST(GroupSpec, NamedFamiliesHaveExpectedOrders) {
  EXPECT_EQ(parse_group_spec("S4").build().order(), 24u);
  EXPECT_EQ(parse_group_spec("s1").build().order(), 1u);
  EXPECT_EQ(parse_group_spec("A4").build().order(), 12u);
  EXPECT_EQ(parse_group_spec("A5").build().order(), 60u);
  EXPECT_EQ(parse_group_spec("A2").build().order(), 1u);
  EXPECT_EQ(parse_group_spec("C7").build().order(), 7u);
  for (std::size_t n = 3; n <= 8; ++n) {
    EXPECT_EQ(dihedral_group(n).build().order(), 2 * n);
  }
  EXPECT_EQ(parse_group_spec("4:(1 2 3 4);(1 3)").build(), parse_group_spec("D4").build());
  EXPECT_EQ(parse_group_spec("4:").build().order(), 1u);
}

TEST(GroupSpec, AlternatingGroupsAreEven) {
  for (std::size_t n = 3; n <= 6; ++n) {
    std::size_t factorial = 1;
    for (std::size_t k = 2; k <= n; ++k) factorial *= k;
    EXPECT_EQ(alternating_group(n).build().order(), factorial / 2);
  }
}

TEST(GroupSpec, Errors) {
  EXPECT_THROW(parse_group_spec(""), ParseError);
  EXPECT_THROW(parse_group_spec("X3"), ParseError);
  EXPECT_THROW(parse_group_spec("S"), ParseError);
  EXPECT_THROW(parse_group_spec("S0"), ParseError);
  EXPECT_THROW(parse_group_spec("D2"), ParseError);
  EXPECT_THROW(parse_group_spec("3:(1 4)"), ParseError);
  EXPECT_THROW(parse_group_spec("x:(1 2)"), ParseError);
}

TEST(Cli, Orbits) {
  auto r = run({"orbits", "3:(1 2)"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1,2|3\n");
}

TEST(Cli, Stab) {
  auto r = run({"stab", "S3", "--partition", "1,2|3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "order 2\n()\n(1 2)\n");
}

TEST(Cli, Barycenter) {
  auto r = run({"barycenter", "C3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1/3 1/3 1/3\n1/3 1/3 1/3\n1/3 1/3 1/3\n");
  auto oracle = run({"barycenter", "D5", "--oracle", "--json"});
  auto formula = run({"barycenter", "D5", "--json"});
  EXPECT_EQ(oracle.out, formula.out);
  EXPECT_EQ(nlohmann::json::parse(formula.out)[0][0], "1/5");
}

TEST(Cli, Dim) {
  EXPECT_EQ(run({"dim", "S4"}).out, "9\n");
  EXPECT_EQ(run({"dim", "S1"}).out, "0\n");
}

TEST(Cli, FaceTest) {
  auto yes = run({"face-test", "S3", "--subgroup", "(1 2)"});
  EXPECT_EQ(yes.status, 0);
  EXPECT_NE(yes.out.find("combinatorial: face"), std::string::npos);
  EXPECT_NE(yes.out.find("geometric: face"), std::string::npos);
  EXPECT_NE(yes.out.find("certificate b = "), std::string::npos);

  auto no = run({"face-test", "S3", "--subgroup", "(1 2 3)", "--method", "lp"});
  EXPECT_EQ(no.status, 0);
  EXPECT_EQ(no.out, "geometric: not a face (slack 0)\n");

  auto comb = run({"face-test", "S3", "--subgroup", "(1 2 3)", "--method", "comb"});
  EXPECT_EQ(comb.out, "combinatorial: not a face\n");

  EXPECT_EQ(run({"face-test", "C3", "--subgroup", "(1 2)"}).status, kUsageError);
  EXPECT_EQ(run({"face-test", "S3", "--subgroup", "(1 2)", "--method", "x"}).status, kUsageError);
}

TEST(Cli, SubgroupsAndFaceSubgroups) {
  auto subs = run({"subgroups", "S3"});
  EXPECT_EQ(subs.status, 0);
  EXPECT_NE(subs.out.find("subgroups 6\n"), std::string::npos);

  auto faces = run({"face-subgroups", "S3"});
  EXPECT_EQ(faces.status, 0);
  EXPECT_EQ(std::count(faces.out.begin(), faces.out.end(), '\n'), 5);
  EXPECT_EQ(faces.out.find("orbits 1,2,3\tgenerators (1 2 3)"), std::string::npos);
}

TEST(Cli, VerifyTheoremWritesJson) {
  const auto path = temp_path("s3.json");
  auto r = run({"verify-theorem", "S3", "--json", path.string()});
  EXPECT_EQ(r.status, 0);
  std::ifstream file(path);
  const auto j = nlohmann::json::parse(file);
  EXPECT_EQ(j.at("subgroup_count"), 6);
  EXPECT_EQ(j.at("face_subgroup_count"), 5);
  EXPECT_EQ(j.at("agreement"), true);

  const auto report = report_from_json(j);
  EXPECT_EQ(report, verify_theorem(parse_group_spec("S3").build(), "S3"));
  std::filesystem::remove(path);
}

TEST(Cli, TextAndJsonReportTheSameNumbers) {
  const auto path = temp_path("d4.json");
  auto r = run({"verify-theorem", "D4", "--json", path.string()});
  std::ifstream file(path);
  const auto j = nlohmann::json::parse(file);
  EXPECT_NE(r.out.find("subgroups " + std::to_string(j.at("subgroup_count").get<int>()) + "\n"),
            std::string::npos);
  EXPECT_NE(r.out.find("face-subgroups " +
                       std::to_string(j.at("face_subgroup_count").get<int>()) + "\n"),
            std::string::npos);
  EXPECT_NE(r.out.find(" order " + std::to_string(j.at("order").get<int>()) + "\n"),
            std::string::npos);
  EXPECT_NE(r.out.find("agreement true\n"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).status, kUsageError);
  EXPECT_EQ(run({"bogus"}).status, kUsageError);
  EXPECT_EQ(run({"orbits", "Q3"}).status, kUsageError);
  EXPECT_EQ(run({"stab", "S3", "--partition", "1,2"}).status, kUsageError);
  EXPECT_EQ(run({"orbits", "S8", "--closure-cap", "100"}).status, kCapExceeded);
  EXPECT_EQ(run({"--closure-cap", "100", "orbits", "S8"}).status, kCapExceeded);
  EXPECT_EQ(run({"subgroups", "S6"}).status, kCapExceeded);
  EXPECT_EQ(run({"verify-theorem", "S4", "--subgroup-cap", "10"}).status, kCapExceeded);
  EXPECT_EQ(run({"--help"}).status, kOk);
}

}  // namespace
}  // namespace permpoly::cli
