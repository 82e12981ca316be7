#include <gtest/gtest.h>

#include "lpm/fibration/faces.hpp"
#include "lpm/report/io.hpp"

using namespace lpm;

namespace {

StrataPoset base_strata(const Degree& d) {
  return strata_poset(d, Sublattice(del_pezzo_pair(d).picard, {}, true));
}

}  // namespace

TEST(Faces, DegreeSixInputLociAreOneToOne) {
  Degree d = Degree::parse("6");
  auto pol = parse_polarization(del_pezzo_pair(d), "full");
  auto rep = face_subfamily_report(pol, base_strata(d), dp6_root_variables(), dp6_input_loci(), "input-data");
  EXPECT_TRUE(rep.one_to_one());
  for (const auto& l : rep.loci) EXPECT_EQ(l.source, "input-data");
  // the two A1 strata sit over the two different admissible orbits
  std::vector<std::string> a1;
  for (const auto& m : rep.matches)
    if (m.root_type == "A1") a1.push_back(rep.loci[m.loci.at(0)].name);
  std::sort(a1.begin(), a1.end());
  EXPECT_EQ(a1, (std::vector<std::string>{"Y1", "Y2"}));
}

TEST(Faces, LociFileMatchesBuiltinInput) {
  LociInput in = loci_from_json(read_json_file(std::string(LPM_DATA_DIR) + "/loci/dp6_loci.json"));
  auto ref = dp6_input_loci();
  ASSERT_EQ(in.loci.size(), ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    EXPECT_EQ(in.loci[i].name, ref[i].name);
    EXPECT_EQ(in.loci[i].fibers, ref[i].fibers);
    ASSERT_EQ(in.loci[i].equations.size(), ref[i].equations.size());
    for (std::size_t k = 0; k < ref[i].equations.size(); ++k)
      EXPECT_EQ(in.loci[i].equations[k].str(), ref[i].equations[k].str());
  }
  EXPECT_EQ(in.root_variables, dp6_root_variables());
}

TEST(Faces, WrongFibersBreakTheMatch) {
  Degree d = Degree::parse("6");
  auto pol = parse_polarization(del_pezzo_pair(d), "full");
  auto loci = dp6_input_loci();
  loci[4].fibers = {"I2", "I2", "I1", "I1"};  // Y22 mislabelled
  auto rep = face_subfamily_report(pol, base_strata(d), dp6_root_variables(), loci, "input-data");
  EXPECT_FALSE(rep.one_to_one());
}

TEST(Faces, DegreeEightPrimeComputedLoci) {
  Degree d = Degree::parse("8'");
  PencilFamily f = builtin_family("f2");
  auto loci = computed_loci(f, singular_fiber_polynomial(f), {{"x", Rat(3)}, {"y", Rat(5)}});
  ASSERT_EQ(loci.size(), 2u);
  EXPECT_EQ(loci[1].equations.at(0).str(), "4*x - 1");
  auto pol = parse_polarization(del_pezzo_pair(d), "full");
  auto rep = face_subfamily_report(pol, base_strata(d), {{"x", {-1, 1}}}, loci, "computed");
  EXPECT_TRUE(rep.one_to_one());
}

TEST(Faces, LociRejectUndeclaredVariables) {
  Json j = Json::parse(R"({"variables": ["x"], "root_variables": {}, "loci": [{"name": "a", "equations": ["x - q"], "fibers": []}]})");
  EXPECT_THROW(loci_from_json(j), AlgebraError);
}
