#include <array>
#include <cctype>
#include <cstdio>
#include <string>

#include <gtest/gtest.h>

#include "lpm/report/json.hpp"
#include "lpm/report/markdown.hpp"

using namespace lpm;

namespace {

struct CliRun {
  int status;
  std::string out;
};

// Runs the CLI with stderr discarded.
CliRun cli(const std::string& args) {
  std::string cmd = std::string(LPM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string data(const std::string& rel) { return std::string(LPM_DATA_DIR) + "/" + rel; }

}  // namespace

TEST(Json, IntegersFallBackToStrings) {
  EXPECT_TRUE(to_json(Int(42)).is_number_integer());
  Int big("123456789012345678901234567890");
  EXPECT_EQ(to_json(big), Json("123456789012345678901234567890"));
  EXPECT_EQ(rat_json(Rat(-27, 256)), Json("-27/256"));
}

TEST(Json, TablesReportListsEveryDegree) {
  Json j = to_json(reproduce_tables());
  EXPECT_TRUE(j.at("all_match").get<bool>());
  EXPECT_EQ(j.at("rows").size(), 10u);
  EXPECT_EQ(j.at("rows")[5].at("F_perp").at("type"), "~A2+A1");
}

TEST(Markdown, FlatRecordsBecomeTables) {
  Json j{{"report", "demo"}, {"n", 3}, {"rows", Json::array({Json{{"a", 1}, {"b", "x|y"}}, Json{{"a", 2}}})}};
  std::string md = render_markdown(j);
  EXPECT_NE(md.find("# demo"), std::string::npos);
  EXPECT_NE(md.find("- **n**: 3"), std::string::npos);
  EXPECT_NE(md.find("| a | b |"), std::string::npos);
  EXPECT_NE(md.find("x\\|y"), std::string::npos);
  EXPECT_EQ(md.find("\n\n\n"), std::string::npos);
}

TEST(Loaders, LatticeFileAndNames) {
  EXPECT_EQ(load_lattice(data("lattices/d4.json")).rank(), 4u);
  EXPECT_EQ(load_lattice("E7").rank(), 7u);
  EXPECT_THROW(load_lattice(data("lattices/missing.json")), AlgebraError);
  EXPECT_THROW(lattice_from_json(Json::parse(R"({"gram": [[1, 2], [3]]})")), AlgebraError);
}

TEST(Loaders, FamilyFileRenamesParameters) {
  PencilFamily f = load_family(data("families/f2_uv.json"));
  EXPECT_EQ(f.params, (std::vector<std::string>{"u", "v"}));
  EXPECT_EQ(collision_locus(f, singular_fiber_polynomial(f)).locus.str(), "4*u - 1");
}

class CliStability : public ::testing::TestWithParam<std::string> {};

TEST_P(CliStability, ByteIdenticalReruns) {
  CliRun a = cli(GetParam()), b = cli(GetParam());
  EXPECT_EQ(a.status, 0) << GetParam();
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(a.out, b.out) << GetParam();
}

INSTANTIATE_TEST_SUITE_P(Commands, CliStability,
                         ::testing::Values("tables", "tables --format md", "roots --lattice E6",
                                           "cone --degree 6 --polarization full", "mirror --degree 6 --polarization simple:1",
                                           "strata --degree 6", "theta --config f2", "fibration --family f1 --symbolic",
                                           "fibration --family f2 --x 1/4 --y 1 --surface",
                                           "fibration --family p1p1 --at-locus x-y --format md"),
                         [](const ::testing::TestParamInfo<std::string>& info) {
                           std::string name;
                           for (char c : info.param) name += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
                           return name;
                         });

TEST(Cli, SymbolicQuartic) {
  CliRun r = cli("fibration --family f1 --symbolic");
  ASSERT_EQ(r.status, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("collision").at("locus"), "27*x^2 + 256*y");
  EXPECT_NE(r.out.find("t^4 + t^3*x - 8*t^2*y - 36*t*x*y - 27*x^2*y + 16*y^2"), std::string::npos);
}

TEST(Cli, FaceReportFromFile) {
  CliRun r = cli("strata --degree 6 --loci " + data("loci/dp6_loci.json"));
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(Json::parse(r.out).at("faces").at("one_to_one").get<bool>());
}

TEST(Cli, ExitStatuses) {
  EXPECT_EQ(cli("").status, 2);
  EXPECT_EQ(cli("frobnicate").status, 2);
  EXPECT_EQ(cli("roots").status, 2);
  EXPECT_EQ(cli("tables --format xml").status, 2);
  EXPECT_EQ(cli("fibration --family f2 --symbolic --x 1").status, 2);
  EXPECT_EQ(cli("roots --lattice Q9").status, 1);
  EXPECT_EQ(cli("fibration --family f2 --x 0 --y 1").status, 1);
  // missing curve counts are reported, with a failing status
  CliRun t = cli("theta --config dp6");
  EXPECT_EQ(t.status, 1);
  EXPECT_EQ(Json::parse(t.out).at("missing_counts").size(), 4u);
}

TEST(Cli, WritesToFile) {
  std::string path = ::testing::TempDir() + "lpm_tables.json";
  EXPECT_EQ(cli("tables --out " + path).status, 0);
  EXPECT_EQ(read_json_file(path), Json::parse(cli("tables").out));
}
