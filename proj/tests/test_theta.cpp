#include <set>

#include <gtest/gtest.h>

#include "lpm/fibration/family.hpp"
#include "lpm/report/io.hpp"
#include "lpm/theta/theta.hpp"

using namespace lpm;

namespace {

// Relations as a sign-free set of canonical strings.
std::set<std::string> relation_set(const std::vector<MultiPoly>& rels, const std::vector<std::string>& vars) {
  std::set<std::string> out;
  for (const auto& r : rels) out.insert(r.with_vars(vars).primitive_part().str());
  return out;
}

std::set<std::string> expected(std::initializer_list<const char*> rels, const std::vector<std::string>& vars) {
  std::vector<MultiPoly> ps;
  for (const char* r : rels) ps.push_back(parse_poly(r, vars));
  return relation_set(ps, vars);
}

const std::vector<std::string> kVars{"a", "b", "c", "d", "x", "y"};

}  // namespace

TEST(Theta, HirzebruchTwo) {
  auto p = presentation(builtin_config("f2"));
  EXPECT_EQ(p.generators, (std::vector<std::string>{"a", "b", "c", "d"}));
  EXPECT_EQ(relation_set(p.relations, kVars), expected({"a*c - y", "b*d - x*a^2"}, kVars));
}

TEST(Theta, ProductOfLines) {
  auto p = presentation(builtin_config("p1p1"));
  EXPECT_EQ(relation_set(p.relations, kVars), expected({"a*c - y", "b*d - x"}, kVars));
}

TEST(Theta, HirzebruchOne) {
  auto p = presentation(builtin_config("f1"));
  EXPECT_EQ(relation_set(p.relations, kVars), expected({"a*c - y", "b*d - x*a"}, kVars));
}

TEST(Theta, PresentationsAreDeterministic) {
  for (const char* name : {"f2", "p1p1", "f1"}) {
    auto a = presentation(builtin_config(name)), b = presentation(builtin_config(name));
    ASSERT_EQ(a.relations.size(), b.relations.size());
    for (std::size_t i = 0; i < a.relations.size(); ++i) EXPECT_EQ(a.relations[i].str(), b.relations[i].str());
  }
}

TEST(Theta, FamiliesFromPresentationsMatchBuiltins) {
  for (const char* name : {"f2", "p1p1", "f1"}) {
    auto c = builtin_config(name);
    auto fam = family_from_presentation(name, Degree::parse(std::string(name) == "f1" ? "8" : "8'"), presentation(c));
    auto ref = builtin_family(name);
    auto vars = ref.vars();
    std::set<std::string> a{fam.g1.with_vars(vars).primitive_part().str(), fam.g2.with_vars(vars).primitive_part().str()};
    std::set<std::string> b{ref.g1.primitive_part().str(), ref.g2.primitive_part().str()};
    EXPECT_EQ(a, b) << name;
  }
}

TEST(Theta, FanOfFourCycle) {
  Fan fan = build_fan(builtin_config("f2"));
  EXPECT_EQ(fan.k, 4u);
  std::size_t rays = 0, two = 0;
  for (const auto& c : fan.cones) (c.size() == 1 ? rays : two)++;
  EXPECT_EQ(rays, 4u);
  EXPECT_EQ(two, 4u);
}

TEST(Theta, FanSupport) {
  EXPECT_TRUE(in_fan_support({0, 0, 0, 0}));
  EXPECT_TRUE(in_fan_support({2, 0, 0, 0}));
  EXPECT_TRUE(in_fan_support({1, 3, 0, 0}));
  EXPECT_TRUE(in_fan_support({1, 0, 0, 1}));
  EXPECT_FALSE(in_fan_support({1, 0, 1, 0}));
  EXPECT_FALSE(in_fan_support({-1, 0, 0, 0}));
}

TEST(Theta, DegreeSixNeedsCounts) {
  auto c = builtin_config("dp6");
  auto missing = missing_counts(c, {});
  EXPECT_EQ(missing.size(), 4u);
  for (const auto& [key, term] : missing) EXPECT_FALSE(describe_count_key(c, key).empty());
  try {
    presentation(c);
    FAIL() << "expected a missing-count error";
  } catch (const AlgebraError& e) {
    EXPECT_NE(std::string(e.what()).find("count required"), std::string::npos);
  }
}

TEST(Theta, RejectsNonCyclicConfigurations) {
  auto c = builtin_config("f2");
  std::swap(c.components[1], c.components[2]);
  EXPECT_THROW(c.validate(), AlgebraError);
  auto d = builtin_config("p1p1");
  d.monoid_generators = {{1, 0}, {-1, 0}};
  EXPECT_THROW(d.validate(), AlgebraError);
}

TEST(Theta, CycleFilesMatchBuiltins) {
  for (const char* name : {"f2", "p1p1", "f1", "dp6"}) {
    CycleConfig file = load_cycle(std::string(LPM_DATA_DIR) + "/cycles/" + name + ".json");
    CycleConfig ref = builtin_config(name);
    EXPECT_EQ(file.components, ref.components) << name;
    EXPECT_EQ(file.monoid_generators, ref.monoid_generators) << name;
    EXPECT_EQ(file.picard->gram(), ref.picard->gram()) << name;
  }
}
